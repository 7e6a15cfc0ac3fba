"""Shared generators and fixed corpora for the test suite.

Everything random is seeded so the corpora are fixed: reruns exercise
identical systems and the expected values frozen in the tests stay
meaningful.
"""

from __future__ import annotations

import random

from newtonzeta import IntPoint, LatticePolytope, SystemSpec, hull


def random_support(rng: random.Random, n: int, hi: int = 3,
                   npts: int | None = None) -> list[list[int]]:
    npts = npts or rng.randint(1, 4)
    pts: set[tuple[int, ...]] = set()
    while len(pts) < npts:
        pts.add(tuple(rng.randint(0, hi) for _ in range(n)))
    return [list(p) for p in sorted(pts)]


def random_polytope(rng: random.Random, d: int, hi: int = 3,
                    npts: int | None = None) -> LatticePolytope:
    return hull([IntPoint(tuple(p)) for p in random_support(rng, d, hi, npts)])


def route_corpus() -> list[SystemSpec]:
    """Fixed corpus of objective-bearing systems: 25 random plus 5 curated.

    Random systems have n <= 3, at most one constraint, and supports in
    the box [0, 3]^n; the curated ones pin the explicitly hand-checked
    cases.
    """
    rng = random.Random(987654321)
    systems = []
    while len(systems) < 25:
        n = rng.randint(1, 3)
        k = rng.randint(0, min(1, n - 1))
        constraints = [random_support(rng, n) for _ in range(k)]
        systems.append(SystemSpec.from_supports(
            n, constraints, objective_support=random_support(rng, n)
        ))
    curated = [
        SystemSpec.from_supports(1, [], objective_support=[[1]]),
        SystemSpec.from_supports(1, [], objective_support=[[2]]),
        SystemSpec.from_supports(1, [], objective_support=[[3]]),
        SystemSpec.from_supports(2, [], objective_support=[[1, 1]]),
        SystemSpec.from_supports(
            2, [[[0, 0], [1, 0], [0, 1]]], objective_support=[[1, 0]]
        ),
    ]
    return systems + curated


def deformation_corpus() -> list[SystemSpec]:
    """Fixed corpus of deformation systems (no objective), n <= 3."""
    rng = random.Random(24680)
    systems = []
    while len(systems) < 12:
        n = rng.randint(2, 3)
        k = rng.randint(1, min(2, n - 1))
        systems.append(SystemSpec.from_supports(
            n, [random_support(rng, n) for _ in range(k)]
        ))
    systems.append(SystemSpec.from_supports(
        2, [[[1, 0], [0, 1], [2, 1]]]
    ))
    return systems


def curated_degree_systems() -> list[tuple[SystemSpec, int]]:
    """Deformation systems whose generic fibers are hand-checked.

    Every constraint meets the parameter axis, so the generic fiber
    misses the origin, and the slice polynomials keep full support for
    generic parameter values; the paired integer is the hand-derived
    Euler characteristic of the generic fiber.
    """
    return [
        # two-point fiber, one branch near zero and one near infinity
        (SystemSpec.from_supports(2, [[[1, 0], [0, 1], [2, 1]]]), 2),
        # hyperbola: single torus point per slice
        (SystemSpec.from_supports(2, [[[1, 1], [0, 0]]]), 1),
        # affine line slice: one point, away from zero
        (SystemSpec.from_supports(2, [[[0, 0], [1, 0], [0, 1]]]), 1),
        # quadratic slice: two points, both in the torus
        (SystemSpec.from_supports(2, [[[0, 1], [1, 0], [2, 0]]]), 2),
        # square support: slice is a punctured affine line
        (SystemSpec.from_supports(3, [[[0, 0, 1], [1, 0, 0], [0, 1, 0], [1, 1, 0]]]), 0),
        # two hyperplane slices meeting in one torus point
        (SystemSpec.from_supports(
            3, [[[0, 0, 1], [1, 0, 0]], [[0, 0, 1], [0, 1, 0]]]
        ), 1),
    ]
