"""Exact lattice linear algebra: points, covectors, frames, saturation.

Everything is arbitrary-precision integer (or Fraction) arithmetic; no
floating point enters at any stage.  The workhorse is the integer kernel
of an integer matrix, computed by unimodular column reduction; saturated
spans, frame coordinates and primitive line normals all reduce to it.

Points and covectors are deliberately distinct types even though both
wrap integer vectors: the only pairing the code ever performs is
``Covector.pair(IntPoint)``, which rules out a whole class of
direction-confusion bugs at type-check time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

__all__ = [
    "IntPoint",
    "Covector",
    "LatticeFrame",
    "primitive_part",
    "saturated_basis",
    "to_frame_coords",
    "orthogonal_line_generators",
]


def _as_int_tuple(coords) -> tuple[int, ...]:
    out = tuple(coords)
    for c in out:
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError(f"integer coordinates required, got {c!r}")
    return out


@dataclass(frozen=True)
class IntPoint:
    """A lattice point, or an integer direction vector, in Z^n."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", _as_int_tuple(self.coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def _check(self, other: "IntPoint") -> None:
        if not isinstance(other, IntPoint):
            raise TypeError(f"expected IntPoint, got {type(other).__name__}")
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "IntPoint") -> "IntPoint":
        self._check(other)
        return IntPoint(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "IntPoint") -> "IntPoint":
        self._check(other)
        return IntPoint(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "IntPoint":
        return IntPoint(tuple(-a for a in self.coords))

    def scaled(self, c: int) -> "IntPoint":
        return IntPoint(tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self) -> str:
        return f"IntPoint{self.coords}"


@dataclass(frozen=True)
class Covector:
    """An integer linear functional, written in the dual basis."""

    comps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "comps", _as_int_tuple(self.comps))

    @property
    def dim(self) -> int:
        return len(self.comps)

    def pair(self, point: IntPoint) -> int:
        """Evaluate the functional on a point. The one allowed pairing."""
        if not isinstance(point, IntPoint):
            raise TypeError("covectors pair with IntPoint only")
        if point.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {point.dim}")
        return sum(c * k for c, k in zip(self.comps, point.coords))

    def is_zero(self) -> bool:
        return not any(self.comps)

    def is_primitive(self) -> bool:
        g = 0
        for c in self.comps:
            g = gcd(g, c)
        return g == 1

    def __neg__(self) -> "Covector":
        return Covector(tuple(-c for c in self.comps))

    def __repr__(self) -> str:
        return f"Covector{self.comps}"


# ---------------------------------------------------------------------------
# raw integer matrix helpers (tuples in, tuples out)
# ---------------------------------------------------------------------------

def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def _int_kernel(rows: Sequence[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    """Basis of {x in Z^n : r.x = 0 for every row r}.

    The result is a basis of a direct summand of Z^n (the kernel lattice
    is saturated by construction): the active columns of a unimodular
    column reduction of the row stack.
    """
    cols = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    for row in rows:
        vals = [sum(r * c for r, c in zip(row, col)) for col in cols]
        pivot = None
        for j, v in enumerate(vals):
            if v == 0:
                continue
            if pivot is None:
                pivot = j
                continue
            a, b = vals[pivot], v
            g, x, y = _xgcd(a, b)
            cp, cj = cols[pivot], cols[j]
            new_p = tuple(x * p + y * q for p, q in zip(cp, cj))
            new_j = tuple((-b // g) * p + (a // g) * q for p, q in zip(cp, cj))
            cols[pivot], cols[j] = new_p, new_j
            vals[pivot], vals[j] = g, 0
        if pivot is not None:
            del cols[pivot]
    return cols


def _rank(rows: Sequence[tuple[int, ...]]) -> int:
    """Rank over Q of a stack of integer rows (exact elimination)."""
    work = [list(map(Fraction, r)) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    col = 0
    while rank < len(work) and col < ncols:
        piv = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        work[rank], work[piv] = work[piv], work[rank]
        lead = work[rank][col]
        for i in range(rank + 1, len(work)):
            f = work[i][col] / lead
            if f:
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
        col += 1
    return rank


def _solve_in_basis(
    basis: Sequence[tuple[int, ...]], target: tuple[int, ...]
) -> list[Fraction] | None:
    """Solve sum_j x_j * basis[j] = target exactly; None when unsolvable."""
    r = len(basis)
    if r == 0:
        return [] if not any(target) else None
    n = len(target)
    # augmented system, unknowns are the basis coefficients
    aug = [[Fraction(basis[j][i]) for j in range(r)] + [Fraction(target[i])]
           for i in range(n)]
    pivots: list[int] = []
    row = 0
    for col in range(r):
        piv = next((i for i in range(row, n) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        lead = aug[row][col]
        aug[row] = [a / lead for a in aug[row]]
        for i in range(n):
            if i != row and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
    # consistency: remaining rows must have zero rhs
    for i in range(row, n):
        if aug[i][r] != 0:
            return None
    if len(pivots) < r:
        # basis vectors dependent; callers guarantee independence
        raise ValueError("frame basis is linearly dependent")
    sol = [Fraction(0)] * r
    for i, col in enumerate(pivots):
        sol[col] = aug[i][r]
    return sol


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def primitive_part(v: Covector) -> Covector:
    """Divide an integer covector by the gcd of its components.

    Sign is preserved; the zero covector is rejected.
    """
    if not isinstance(v, Covector):
        raise TypeError("primitive_part expects a Covector")
    if v.is_zero():
        raise ValueError("zero covector")
    g = 0
    for c in v.comps:
        g = gcd(g, c)
    return Covector(tuple(c // g for c in v.comps))


def saturated_basis(vectors: Sequence[IntPoint]) -> list[IntPoint]:
    """Basis of the saturation (rational span intersected with Z^n).

    The output lattice contains the input span, has the same rank, and is
    a direct summand of Z^n, so integer points of the span always have
    integer coordinates in it.  Empty input gives an empty basis.
    """
    vecs = list(vectors)
    if not vecs:
        return []
    n = vecs[0].dim
    rows = [v.coords for v in vecs]
    if any(len(r) != n for r in rows):
        raise ValueError("mixed dimensions in saturated_basis input")
    orth = _int_kernel(rows, n)
    sat = _int_kernel(orth, n)
    return [IntPoint(b) for b in sat]


@dataclass(frozen=True)
class LatticeFrame:
    """Integer coordinates on a rational affine subspace.

    ``origin + Z<basis>`` is exactly the set of lattice points of the
    affine hull, because the basis is required to generate a saturated
    sublattice.  Volumes measured in frame coordinates are therefore the
    lattice-normalized ones.
    """

    origin: IntPoint
    basis: tuple[IntPoint, ...]
    ambient_dim: int

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        if self.origin.dim != self.ambient_dim:
            raise ValueError("frame origin has wrong dimension")
        rows = [b.coords for b in self.basis]
        for r in rows:
            if len(r) != self.ambient_dim:
                raise ValueError("frame basis vector has wrong dimension")
        if rows and _rank(rows) != len(rows):
            raise ValueError("frame basis is linearly dependent")
        sat = _int_kernel(_int_kernel(rows, self.ambient_dim), self.ambient_dim)
        for s in sat:
            sol = _solve_in_basis(rows, s)
            if sol is None or any(x.denominator != 1 for x in sol):
                raise ValueError("frame basis does not generate a saturated lattice")

    @property
    def rank(self) -> int:
        return len(self.basis)

    @classmethod
    def standard(cls, n: int) -> "LatticeFrame":
        origin = IntPoint((0,) * n)
        basis = tuple(
            IntPoint(tuple(1 if i == j else 0 for i in range(n))) for j in range(n)
        )
        return cls(origin, basis, n)

    @classmethod
    def span_of(
        cls, directions: Sequence[IntPoint], ambient_dim: int,
        origin: IntPoint | None = None,
    ) -> "LatticeFrame":
        """Frame of the saturated span of the given directions."""
        basis = saturated_basis(directions)
        if origin is None:
            origin = IntPoint((0,) * ambient_dim)
        return cls(origin, tuple(basis), ambient_dim)


def to_frame_coords(
    points: Sequence[IntPoint], frame: LatticeFrame
) -> list[IntPoint]:
    """Integer coordinates of points in the frame basis.

    Every point must lie in the affine hull spanned by the frame; the
    saturation invariant then guarantees integrality, which is asserted.
    """
    basis_rows = [b.coords for b in frame.basis]
    out = []
    for p in points:
        if p.dim != frame.ambient_dim:
            raise ValueError("point dimension does not match frame")
        delta = tuple(a - b for a, b in zip(p.coords, frame.origin.coords))
        sol = _solve_in_basis(basis_rows, delta)
        if sol is None:
            raise ValueError("point not in frame span")
        coords = []
        for x in sol:
            if x.denominator != 1:
                raise ValueError("non-integer frame coordinates (frame not saturated)")
            coords.append(int(x))
        out.append(IntPoint(tuple(coords)))
    return out


def orthogonal_line_generators(
    directions: Sequence[IntPoint], ambient_dim: int
) -> tuple[Covector, Covector]:
    """The two primitive covectors annihilating a corank-1 span.

    The input directions must span a subspace of rank exactly
    ``ambient_dim - 1``; the annihilator is then a line in the dual
    lattice, and its two primitive generators are returned.
    """
    rows = [d.coords for d in directions]
    for r in rows:
        if len(r) != ambient_dim:
            raise ValueError("direction dimension does not match ambient_dim")
    if _rank(rows) != ambient_dim - 1:
        raise ValueError("normal space not a line")
    kern = _int_kernel(rows, ambient_dim)
    assert len(kern) == 1
    beta = Covector(kern[0])
    return beta, -beta
