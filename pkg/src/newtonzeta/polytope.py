"""Exact lattice polytopes in vertex representation.

A polytope is carried by its irredundant vertex set; faces, facet
normals and Minkowski sums are all computed from vertices with exact
integer/rational arithmetic.  Facets of a full-dimensional polytope are
enumerated by a double description sweep over the dual cone of the
homogenization, which stays exact in any ambient dimension; degenerate
(lower-dimensional) inputs are first reduced to a saturated frame of
their affine hull.  Facet and vertex computations are memoized per
vertex set, since the same polytopes recur heavily in mixed-volume work.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .lattice import (
    Covector,
    IntPoint,
    _int_kernel,
    _rank,
    _solve_in_basis,
)

__all__ = [
    "LatticePolytope",
    "FaceRecord",
    "hull",
    "dim",
    "support_min",
    "face",
    "minkowski_sum",
    "restrict_to_index_set",
    "facet_normals",
]


Vec = tuple[int, ...]


def _sub(p: Vec, q: Vec) -> Vec:
    return tuple(a - b for a, b in zip(p, q))


def _dot(a: Vec, b: Vec) -> int:
    return sum(x * y for x, y in zip(a, b))


def _primitive(v: Vec) -> Vec:
    g = 0
    for c in v:
        g = gcd(g, c)
    if g == 0:
        raise ValueError("zero vector has no primitive part")
    return tuple(c // g for c in v)


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of finitely many lattice points, stored by vertices.

    ``vertices`` is canonically sorted and irredundant: every stored
    point is an extreme point of the hull.  The empty polytope keeps its
    ambient dimension so sums and restrictions stay well-typed.
    """

    vertices: tuple[IntPoint, ...]
    ambient_dim: int

    def __post_init__(self):
        verts = tuple(sorted(self.vertices, key=lambda p: p.coords))
        object.__setattr__(self, "vertices", verts)
        for v in verts:
            if v.dim != self.ambient_dim:
                raise ValueError("vertex dimension does not match ambient_dim")
        if len({v.coords for v in verts}) != len(verts):
            raise ValueError("duplicate vertices")

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @classmethod
    def empty(cls, ambient_dim: int) -> "LatticePolytope":
        return cls((), ambient_dim)

    @classmethod
    def point(cls, p: IntPoint) -> "LatticePolytope":
        return cls((p,), p.dim)

    def raw_vertices(self) -> list[Vec]:
        return [v.coords for v in self.vertices]

    def translate(self, by: IntPoint) -> "LatticePolytope":
        return LatticePolytope(tuple(v + by for v in self.vertices), self.ambient_dim)

    def __repr__(self) -> str:
        if self.is_empty:
            return f"LatticePolytope(empty, dim={self.ambient_dim})"
        pts = ", ".join(str(v.coords) for v in self.vertices)
        return f"LatticePolytope([{pts}])"


@dataclass(frozen=True)
class FaceRecord:
    """A face cut out by a covector: the minimizing subset and its level."""

    face: LatticePolytope
    normal: Covector
    min_value: int


# ---------------------------------------------------------------------------
# affine reduction
# ---------------------------------------------------------------------------

def _saturated_rows(rows: Sequence[Vec], n: int) -> list[Vec]:
    return _int_kernel(_int_kernel(rows, n), n)


def _affine_reduce(pts: Sequence[Vec], n: int) -> tuple[list[Vec], list[Vec], Vec]:
    """Translate to pts[0] and rewrite in a saturated basis of the span.

    Returns (reduced points, basis rows, origin).  Reduced points are
    integer vectors of length rank; the map is an affine bijection onto
    the lattice points of the affine hull.
    """
    origin = pts[0]
    diffs = [_sub(p, origin) for p in pts]
    basis = _saturated_rows(diffs, n)
    d = len(basis)
    if d == 0:
        return [() for _ in pts], [], origin
    if d == n and basis == [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]:
        return list(diffs), basis, origin
    reduced = []
    for delta in diffs:
        sol = _solve_in_basis(basis, delta)
        assert sol is not None, "difference escaped its own span"
        coords = []
        for x in sol:
            assert x.denominator == 1, "saturated basis yielded fractions"
            coords.append(int(x))
        reduced.append(tuple(coords))
    return reduced, basis, origin


# ---------------------------------------------------------------------------
# double description facet enumeration (full-dimensional input)
# ---------------------------------------------------------------------------

_facet_cache: dict[
    tuple[int, tuple[Vec, ...]],
    tuple[tuple[tuple[Vec, int], ...], tuple[frozenset[int], ...]],
] = {}


def _dd_facets(pts: Sequence[Vec], d: int) -> tuple[tuple[Vec, int], ...]:
    """Facets of a full-dimensional polytope as (inner normal, min value)."""
    return _dd(pts, d)[0]


def _dd(
    pts: Sequence[Vec], d: int
) -> tuple[tuple[tuple[Vec, int], ...], tuple[frozenset[int], ...]]:
    """Facets plus, per facet, the indices of the input points on it.

    Each facet satisfies ``a . x >= b`` on the polytope with equality
    exactly on the facet; ``a`` is primitive.  Computed as the extreme
    rays of the dual cone ``{(c0, c) : c0 + c.v >= 0 for all vertices}``
    by an incremental double description sweep, whose tight-set masks
    double as the facet-point incidence, saving a full rescan later.
    """
    key = (d, tuple(pts))
    cached = _facet_cache.get(key)
    if cached is not None:
        return cached

    if d == 1:
        lo = min(p[0] for p in pts)
        hi = max(p[0] for p in pts)
        assert lo < hi, "full-dimensional 1-polytope needs two distinct points"
        facets = (((1,), lo), ((-1,), -hi))
        tights = (
            frozenset(i for i, p in enumerate(pts) if p[0] == lo),
            frozenset(i for i, p in enumerate(pts) if p[0] == hi),
        )
        _facet_cache[key] = (facets, tights)
        return facets, tights

    w = d + 1
    rows = [(1,) + p for p in pts]

    # greedy maximal independent subset for the initial simplicial cone
    store: list[list[Fraction]] = []
    init_idx: list[int] = []
    for i, r in enumerate(rows):
        vec = [Fraction(x) for x in r]
        for s in store:
            piv = next(j for j in range(w) if s[j] != 0)
            if vec[piv]:
                f = vec[piv] / s[piv]
                vec = [a - f * b for a, b in zip(vec, s)]
        if any(vec):
            store.append(vec)
            init_idx.append(i)
            if len(init_idx) == w:
                break
    assert len(init_idx) == w, "points are not full-dimensional"

    order = init_idx + [i for i in range(len(rows)) if i not in set(init_idx)]
    mat = [rows[i] for i in init_idx]

    # rays of the initial cone: scaled columns of the inverse of mat
    inv = _invert_fraction_matrix(mat)
    rays: list[Vec] = []
    for j in range(w):
        col = [inv[i][j] for i in range(w)]
        den = 1
        for x in col:
            den = den * x.denominator // gcd(den, x.denominator)
        ivec = tuple(int(x * den) for x in col)
        ivec = _primitive(ivec)
        if _dot(mat[j], ivec) < 0:
            ivec = tuple(-c for c in ivec)
        rays.append(ivec)

    def mask_of(ray: Vec, upto: int) -> int:
        m = 0
        for t in range(upto):
            if _dot(rows[order[t]], ray) == 0:
                m |= 1 << t
        return m

    masks = [mask_of(r, w) for r in rays]

    for t in range(w, len(order)):
        a = rows[order[t]]
        vals = [_dot(a, r) for r in rays]
        if all(v >= 0 for v in vals):
            masks = [m | ((v == 0) << t) for m, v in zip(masks, vals)]
            continue
        plus = [i for i, v in enumerate(vals) if v > 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        minus = [i for i, v in enumerate(vals) if v < 0]
        popcounts = [m.bit_count() for m in masks]
        new_rays: list[Vec] = []
        for ip in plus:
            for im in minus:
                common = masks[ip] & masks[im]
                nbits = common.bit_count()
                if nbits < w - 2:
                    continue
                dominated = False
                for io in range(len(rays)):
                    if popcounts[io] < nbits or io == ip or io == im:
                        continue
                    if common & masks[io] == common:
                        dominated = True
                        break
                if dominated:
                    continue
                vp, vm = vals[ip], vals[im]
                combo = tuple(
                    vp * cm - vm * cp for cp, cm in zip(rays[ip], rays[im])
                )
                new_rays.append(_primitive(combo))
        kept = [(rays[i], masks[i] | ((vals[i] == 0) << t)) for i in plus + zero]
        fresh = [(r, mask_of(r, t + 1)) for r in new_rays]
        merged: dict[Vec, int] = {}
        for r, m in kept + fresh:
            merged[r] = m
        rays = list(merged.keys())
        masks = [merged[r] for r in rays]

    entries = []
    for r, m in zip(rays, masks):
        c0, c = r[0], r[1:]
        assert any(c), "trivial dual ray should not be extreme"
        tight = frozenset(order[t] for t in range(len(order)) if (m >> t) & 1)
        entries.append(((c, -c0), tight))
    entries.sort(key=lambda e: e[0])
    facets = tuple(e[0] for e in entries)
    tights = tuple(e[1] for e in entries)
    _facet_cache[key] = (facets, tights)
    return facets, tights


def _invert_fraction_matrix(mat: Sequence[Vec]) -> list[list[Fraction]]:
    w = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(w)]
           + [Fraction(1 if j == i else 0) for j in range(w)]
           for i in range(w)]
    for col in range(w):
        piv = next(i for i in range(col, w) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        lead = aug[col][col]
        aug[col] = [x / lead for x in aug[col]]
        for i in range(w):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[w:] for row in aug]


# ---------------------------------------------------------------------------
# extreme points
# ---------------------------------------------------------------------------

_extreme_cache: dict[tuple[int, frozenset[Vec]], tuple[Vec, ...]] = {}


def _extreme_points(pts: Sequence[Vec], n: int) -> list[Vec]:
    """Irredundant vertex set of conv(pts) in original coordinates."""
    uniq = sorted(set(pts))
    if len(uniq) <= 1:
        return uniq
    key = (n, frozenset(uniq))
    cached = _extreme_cache.get(key)
    if cached is not None:
        return list(cached)

    reduced, _basis, origin = _affine_reduce(uniq, n)
    d = len(reduced[0])
    if d == 0:
        result = [uniq[0]]
    elif d == 1:
        lo = min(range(len(uniq)), key=lambda i: reduced[i])
        hi = max(range(len(uniq)), key=lambda i: reduced[i])
        result = sorted({uniq[lo], uniq[hi]})
    else:
        facets, tights = _dd(reduced, d)
        incident: list[list[int]] = [[] for _ in uniq]
        for fi, tset in enumerate(tights):
            for pi in tset:
                incident[pi].append(fi)
        result = []
        for pi, fids in enumerate(incident):
            if len(fids) < d:
                continue
            if _rank([facets[fi][0] for fi in fids]) == d:
                result.append(uniq[pi])
        result.sort()
    result_t = tuple(result)
    _extreme_cache[key] = result_t
    return list(result_t)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def hull(points: Iterable[IntPoint], ambient_dim: int | None = None) -> LatticePolytope:
    """Convex hull with an irredundant vertex set.

    ``ambient_dim`` is only needed for an empty point list.
    """
    pts = list(points)
    if not pts:
        if ambient_dim is None:
            raise ValueError("ambient_dim required for an empty hull")
        return LatticePolytope.empty(ambient_dim)
    n = pts[0].dim
    if any(p.dim != n for p in pts):
        raise ValueError("mixed dimensions in hull input")
    if ambient_dim is not None and ambient_dim != n:
        raise ValueError("ambient_dim does not match point dimension")
    extremes = _extreme_points([p.coords for p in pts], n)
    return LatticePolytope(tuple(IntPoint(p) for p in extremes), n)


def dim(P: LatticePolytope) -> int:
    """Affine dimension; the empty polytope has dimension -1."""
    if P.is_empty:
        return -1
    verts = P.raw_vertices()
    diffs = [_sub(v, verts[0]) for v in verts[1:]]
    return _rank(diffs)


def support_min(P: LatticePolytope, alpha: Covector) -> int:
    """Minimum of the covector over the polytope."""
    if P.is_empty:
        raise ValueError("support of empty polytope")
    if alpha.dim != P.ambient_dim:
        raise ValueError("covector dimension does not match polytope")
    return min(alpha.pair(v) for v in P.vertices)


def face(P: LatticePolytope, alpha: Covector) -> FaceRecord:
    """The face where the covector attains its minimum over the polytope."""
    if P.is_empty:
        raise ValueError("face of empty polytope")
    values = [(alpha.pair(v), v) for v in P.vertices]
    m = min(val for val, _ in values)
    face_verts = tuple(v for val, v in values if val == m)
    return FaceRecord(LatticePolytope(face_verts, P.ambient_dim), alpha, m)


def minkowski_sum(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    """Minkowski sum; empty absorbs (the empty-summand convention)."""
    if P.ambient_dim != Q.ambient_dim:
        raise ValueError("dimension mismatch in minkowski_sum")
    if P.is_empty or Q.is_empty:
        return LatticePolytope.empty(P.ambient_dim)
    sums = [p + q for p in P.vertices for q in Q.vertices]
    return hull(sums)


def restrict_to_index_set(P: LatticePolytope, index_set: Iterable[int]) -> LatticePolytope:
    """Intersect with the coordinate subspace of the given indices.

    Valid for polytopes with nonnegative vertices (Newton polytopes and
    their cones), where the intersection is exactly the hull of the
    vertices supported on the index set; a guard enforces nonnegativity.
    Indices are 0-based.
    """
    idx = frozenset(index_set)
    if P.is_empty:
        return P
    for v in P.vertices:
        if any(c < 0 for c in v.coords):
            raise ValueError("restrict_to_index_set requires nonnegative vertices")
    kept = tuple(
        v for v in P.vertices
        if all(c == 0 for i, c in enumerate(v.coords) if i not in idx)
    )
    return LatticePolytope(kept, P.ambient_dim)


def facet_normals(P: LatticePolytope) -> list[FaceRecord]:
    """All facets of a full-dimensional polytope with primitive inner normals.

    Raises for lower-dimensional input; callers handle those cases by the
    orthogonal-line rule instead.
    """
    n = P.ambient_dim
    if dim(P) != n:
        raise ValueError("not full-dimensional")
    if n == 0:
        return []
    raw = P.raw_vertices()
    facets = _dd_facets(raw, n)
    records = []
    for a, b in facets:
        alpha = Covector(a)
        verts = tuple(v for v in P.vertices if _dot(a, v.coords) == b)
        records.append(FaceRecord(LatticePolytope(verts, n), alpha, b))
    return records
