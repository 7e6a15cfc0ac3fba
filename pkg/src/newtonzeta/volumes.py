"""Lattice-normalized volumes and mixed volumes of lattice polytopes.

Volumes are measured in a saturated frame of a rational affine subspace,
so the fundamental lattice cell has volume one.  Mixed volumes come from
the inclusion-exclusion polarization over Minkowski subset sums, scaled
by l! so the result is always a nonnegative integer.  A lattice-point
counting oracle (dilate, count, interpolate) provides an independent
route to the same volumes for cross-validation.

All caches are plain dicts keyed by canonical immutable values: results
are deterministic, so concurrent use can only ever insert equal entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Sequence

from .lattice import LatticeFrame, _rank, _solve_in_basis
from .polytope import (
    LatticePolytope,
    Vec,
    _affine_reduce,
    _dd_facets,
    _dot,
    _extreme_points,
    _sub,
    minkowski_sum,
)

__all__ = [
    "VolumeQuery",
    "lattice_volume",
    "normalized_mixed_volume",
    "mixed_volume_of",
    "lattice_point_volume_oracle",
]


@dataclass(frozen=True)
class VolumeQuery:
    """An ordered tuple of bodies sharing an l-dimensional frame."""

    polytopes: tuple[LatticePolytope, ...]
    frame: LatticeFrame

    def __post_init__(self):
        object.__setattr__(self, "polytopes", tuple(self.polytopes))
        if len(self.polytopes) != self.frame.rank:
            raise ValueError("number of bodies must equal the frame rank")

    @property
    def l(self) -> int:
        return self.frame.rank


# ---------------------------------------------------------------------------
# frame reduction
# ---------------------------------------------------------------------------

def _reduce_to_frame(P: LatticePolytope, frame: LatticeFrame) -> list[Vec]:
    """Translate P to its first vertex and rewrite in frame coordinates.

    Only the direction space matters for volumes, so an arbitrary
    translation into the frame's linear span is allowed; a polytope whose
    directions escape the span is rejected.
    """
    v0 = P.vertices[0]
    basis_rows = [b.coords for b in frame.basis]
    out = []
    for v in P.vertices:
        delta = _sub(v.coords, v0.coords)
        sol = _solve_in_basis(basis_rows, delta)
        if sol is None:
            raise ValueError("polytope outside frame span")
        coords = []
        for x in sol:
            if x.denominator != 1:
                raise ValueError("non-integer frame coordinates")
            coords.append(int(x))
        out.append(tuple(coords))
    return out


def _canonical_pts(pts: Sequence[Vec]) -> tuple[Vec, ...]:
    """Sorted, deduplicated, translated so the lexicographic min is 0."""
    uniq = sorted(set(pts))
    base = uniq[0]
    return tuple(_sub(p, base) for p in uniq)


# ---------------------------------------------------------------------------
# exact determinants and simplex volumes
# ---------------------------------------------------------------------------

def _det_int(rows: Sequence[Vec]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


_tri_cache: dict[frozenset[Vec], tuple[tuple[Vec, ...], ...]] = {}


def _triangulate(pts: tuple[Vec, ...], adim: int) -> tuple[tuple[Vec, ...], ...]:
    """Triangulate from a base vertex into ``adim``-simplices.

    ``pts`` must be the extreme points of a polytope of affine dimension
    ``adim``; simplices are returned as sorted vertex tuples in the same
    coordinates.
    """
    if len(pts) == adim + 1:
        return (tuple(sorted(pts)),)
    key = frozenset(pts)
    cached = _tri_cache.get(key)
    if cached is not None:
        return cached
    m = len(pts[0])
    ordered = sorted(pts)
    reduced, _basis, _origin = _affine_reduce(ordered, m)
    assert reduced and len(reduced[0]) == adim, "affine dimension mismatch"
    facets = _dd_facets(reduced, adim)
    v0 = ordered[0]
    v0_red = reduced[0]
    simplices: list[tuple[Vec, ...]] = []
    for nrm, off in facets:
        if _dot(nrm, v0_red) == off:
            continue
        fverts = tuple(sorted(
            orig for orig, red in zip(ordered, reduced) if _dot(nrm, red) == off
        ))
        for s in _triangulate(fverts, adim - 1):
            simplices.append(tuple(sorted((v0,) + s)))
    result = tuple(simplices)
    _tri_cache[key] = result
    return result


_vol_cache: dict[tuple[Vec, ...], Fraction] = {}


def _volume_of_points(pts: Sequence[Vec], l: int) -> Fraction:
    """l-dimensional normalized volume of conv(pts) inside Z^l."""
    if l == 0:
        return Fraction(1)
    canon = _canonical_pts(pts)
    cached = _vol_cache.get(canon)
    if cached is not None:
        return cached
    extremes = tuple(_extreme_points(list(canon), l))
    base = extremes[0]
    diffs = [_sub(p, base) for p in extremes[1:]]
    adim = _rank(diffs)
    if adim < l:
        vol = Fraction(0)
    else:
        total = 0
        for s in _triangulate(extremes, l):
            mat = [_sub(v, s[0]) for v in s[1:]]
            total += abs(_det_int(mat))
        vol = Fraction(total, factorial(l))
    _vol_cache[canon] = vol
    return vol


# ---------------------------------------------------------------------------
# public volume operations
# ---------------------------------------------------------------------------

def lattice_volume(P: LatticePolytope, frame: LatticeFrame) -> Fraction:
    """Normalized l-dimensional volume of P in the frame (l = frame rank).

    Zero when the polytope has affine dimension below l; the unit lattice
    cube of the frame has volume 1, so the unit l-simplex measures 1/l!.
    """
    if P.is_empty:
        raise ValueError("volume of empty polytope")
    reduced = _reduce_to_frame(P, frame)
    return _volume_of_points(reduced, frame.rank)


_nmv_cache: dict[tuple, int] = {}


def _body_key(P: LatticePolytope, frame: LatticeFrame) -> tuple[Vec, ...]:
    return _canonical_pts(_reduce_to_frame(P, frame))


def mixed_volume_of(
    polytopes: Sequence[LatticePolytope], frame: LatticeFrame
) -> int:
    """l! times the lattice mixed volume of l bodies in an l-frame.

    Inclusion-exclusion over Minkowski subset sums; symmetric, integer,
    nonnegative.  Any empty body gives 0.
    """
    bodies = list(polytopes)
    l = frame.rank
    if len(bodies) != l:
        raise ValueError("number of bodies must equal the frame rank")
    if any(b.is_empty for b in bodies):
        return 0
    if l == 0:
        return 1
    frame_key = (frame.ambient_dim, tuple(b.coords for b in frame.basis))
    key = (tuple(sorted(_body_key(b, frame) for b in bodies)), frame_key)
    cached = _nmv_cache.get(key)
    if cached is not None:
        return cached

    sums: dict[int, LatticePolytope] = {}
    total = Fraction(0)
    for mask in range(1, 1 << l):
        low = mask & (-mask)
        rest = mask ^ low
        body = bodies[low.bit_length() - 1]
        sums[mask] = body if rest == 0 else minkowski_sum(sums[rest], body)
        size = mask.bit_count()
        total += (-1) ** (l - size) * lattice_volume(sums[mask], frame)
    assert total.denominator == 1, "mixed volume failed to be integral"
    result = int(total)
    assert result >= 0, "mixed volume failed to be nonnegative"
    _nmv_cache[key] = result
    return result


def normalized_mixed_volume(q: VolumeQuery) -> int:
    """Mixed volume of a VolumeQuery; see ``mixed_volume_of``."""
    return mixed_volume_of(q.polytopes, q.frame)


# ---------------------------------------------------------------------------
# lattice point counting oracle
# ---------------------------------------------------------------------------

def _fm_project(ineqs: Sequence[tuple[Vec, int]]) -> list[tuple[Vec, int]]:
    """Eliminate the last coordinate from a system a.x >= b (Fourier-Motzkin).

    Right-hand sides are tightened by integrality after primitive scaling,
    which is sound because only integer points are ever enumerated.
    """
    kept: dict[Vec, int] = {}

    def add(a: Vec, b: int) -> None:
        if not any(a):
            return
        g = 0
        for c in a:
            g = gcd(g, c)
        a2 = tuple(c // g for c in a)
        b2 = -((-b) // g)  # ceil(b / g)
        if a2 not in kept or kept[a2] < b2:
            kept[a2] = b2

    lows = []
    ups = []
    for a, b in ineqs:
        if a[-1] == 0:
            add(a[:-1], b)
        elif a[-1] > 0:
            lows.append((a, b))
        else:
            ups.append((a, b))
    for a, b in lows:
        for c, e in ups:
            p = a[-1]
            q = -c[-1]
            combo = tuple(q * x + p * y for x, y in zip(a[:-1], c[:-1]))
            add(combo, q * b + p * e)
    return [(a, b) for a, b in kept.items()]


_count_cache: dict[frozenset[Vec], int] = {}


def _count_lattice_points(pts: Sequence[Vec]) -> int:
    """Number of lattice points in conv(pts)."""
    uniq = sorted(set(pts))
    key = frozenset(uniq)
    cached = _count_cache.get(key)
    if cached is not None:
        return cached
    m = len(uniq[0])
    reduced, _basis, _origin = _affine_reduce(uniq, m)
    a = len(reduced[0])
    if a == 0:
        result = 1
    elif a == 1:
        vals = [p[0] for p in reduced]
        result = max(vals) - min(vals) + 1
    else:
        extremes = _extreme_points(reduced, a)
        systems: list[list[tuple[Vec, int]]] = [list(_dd_facets(extremes, a))]
        for _ in range(a - 1):
            systems.append(_fm_project(systems[-1]))
        systems.reverse()  # systems[j-1] constrains the first j coordinates
        result = _enumerate_count(systems, a)
    _count_cache[key] = result
    return result


def _enumerate_count(systems: list[list[tuple[Vec, int]]], a: int) -> int:
    bounding = []
    for j in range(a):
        bounding.append([(r, b) for r, b in systems[j] if r[j] != 0])

    def rec(prefix: tuple[int, ...], j: int) -> int:
        lo = None
        hi = None
        for r, b in bounding[j]:
            partial = b - sum(r[i] * prefix[i] for i in range(j))
            cj = r[j]
            if cj > 0:
                val = -((-partial) // cj)  # ceil
                if lo is None or val > lo:
                    lo = val
            else:
                val = partial // cj  # floor for negative divisor
                if hi is None or val < hi:
                    hi = val
        assert lo is not None and hi is not None, "polytope is unbounded"
        if hi < lo:
            return 0
        if j == a - 1:
            return hi - lo + 1
        return sum(rec(prefix + (x,), j + 1) for x in range(lo, hi + 1))

    return rec((), 0)


def lattice_point_volume_oracle(
    P: LatticePolytope, frame: LatticeFrame
) -> Fraction:
    """Volume via Ehrhart-style counting, independent of triangulation.

    Counts lattice points of the dilates tP for t = 0..l, takes the l-th
    finite difference to extract the leading coefficient of the counting
    polynomial, which is exactly the normalized l-volume.
    """
    if P.is_empty:
        raise ValueError("volume of empty polytope")
    l = frame.rank
    reduced = _reduce_to_frame(P, frame)
    counts = []
    for t in range(l + 1):
        scaled = [tuple(t * c for c in p) for p in reduced]
        counts.append(_count_lattice_points(scaled))
    lead = sum((-1) ** (l - i) * comb(l, i) * counts[i] for i in range(l + 1))
    return Fraction(lead, factorial(l))
