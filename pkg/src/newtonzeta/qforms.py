"""Combinatorial exponent forms on tuples of polytope faces.

The zeta factors raise (1 - t^m) to integer exponents obtained by
evaluating the degree-l part of prod_i x_i/(1+x_i) on polytopes, where a
monomial x_1^{a_1}...x_k^{a_k} stands for the normalized mixed volume of
the bodies taken with those multiplicities.  Expanding each geometric
series gives one signed term per composition of l into k positive parts,
all carrying the same sign (-1)^(l-k); the enumeration below is explicit
because l never exceeds the ambient dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .lattice import LatticeFrame
from .polytope import LatticePolytope
from .volumes import mixed_volume_of

__all__ = ["Composition", "q_compositions", "q_exponent", "q_tilde_exponent"]


@dataclass(frozen=True)
class Composition:
    """An ordered tuple of positive parts with a fixed total degree."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError("composition parts must be positive integers")

    @property
    def degree(self) -> int:
        return sum(self.parts)


def q_compositions(l: int, k: int) -> list[tuple[Composition, int]]:
    """All compositions of l into k positive parts, with their signs.

    Each composition carries the sign (-1)^(l-k) inherited from the
    series x/(1+x) = x - x^2 + x^3 - ...; the list is empty when k > l
    (no composition exists) and when k = 0 < l (the degree-l part of the
    empty product vanishes).  The degenerate l = k = 0 case contributes
    the single empty composition with sign +1.
    """
    if l < 0 or k < 0:
        raise ValueError("q_compositions arguments must be nonnegative")
    if k == 0:
        return [(Composition(()), 1)] if l == 0 else []
    if k > l:
        return []
    sign = (-1) ** (l - k)
    out = []
    for cuts in combinations(range(1, l), k - 1):
        bounds = (0,) + cuts + (l,)
        parts = tuple(bounds[i + 1] - bounds[i] for i in range(k))
        out.append((Composition(parts), sign))
    return out


def q_exponent(
    l: int, faces: Sequence[LatticePolytope], frame: LatticeFrame
) -> int:
    """Signed sum of mixed volumes over the compositions of degree l.

    The degree-0 case is purely combinatorial (1 for zero bodies, else 0)
    and bypasses the geometry, where a 0-dimensional mixed volume would
    be meaningless.
    """
    k = len(faces)
    if l == 0:
        return 1 if k == 0 else 0
    if frame.rank != l:
        raise ValueError("frame rank must equal the exponent degree")
    if k == 0 or k > l:
        return 0
    if any(f.is_empty for f in faces):
        return 0
    total = 0
    for comp, sign in q_compositions(l, k):
        bodies: list[LatticePolytope] = []
        for body, mult in zip(faces, comp.parts):
            bodies.extend([body] * mult)
        total += sign * mixed_volume_of(bodies, frame)
    return total


def q_tilde_exponent(
    l: int,
    face0: LatticePolytope,
    faces: Sequence[LatticePolytope],
    frame: LatticeFrame,
) -> int:
    """Exponent with a distinguished body: drop it, minus keep it.

    For zero ordinary bodies this collapses to (-1)^l l! Vol_l(face0),
    the hypersurface specialization.
    """
    if face0.is_empty:
        raise ValueError("distinguished body must be nonempty")
    return q_exponent(l, list(faces), frame) - q_exponent(
        l, [face0, *faces], frame
    )
