"""Polytope geometry: hulls, faces, sums, restrictions, facet normals."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from newtonzeta import (
    Covector,
    IntPoint,
    dim,
    face,
    facet_normals,
    hull,
    minkowski_sum,
    restrict_to_index_set,
    support_min,
)
from tests.conftest import random_polytope


def P(*coords):
    return hull([IntPoint(tuple(c)) for c in coords])


def test_hull_drops_interior_edge_point():
    h = P((0, 0), (1, 0), (2, 0), (1, 1))
    assert {v.coords for v in h.vertices} == {(0, 0), (2, 0), (1, 1)}


def test_hull_single_point_and_empty():
    assert {v.coords for v in P((5, 7)).vertices} == {(5, 7)}
    e = hull([], ambient_dim=2)
    assert e.is_empty and e.ambient_dim == 2


def test_hull_rejects_mixed_dimensions():
    with pytest.raises(ValueError, match="mixed dimensions"):
        hull([IntPoint((0, 0)), IntPoint((0, 0, 0))])


@settings(max_examples=60, deadline=None)
@given(st.lists(
    st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)),
    min_size=1, max_size=9,
))
def test_hull_invariant_under_permutation_and_duplication(points):
    pts = [IntPoint(p) for p in points]
    base = hull(pts)
    shuffled = hull(list(reversed(pts)) + pts)
    assert base == shuffled


def test_dim_examples():
    assert dim(P((3, 4))) == 0
    assert dim(P((0, 0), (1, 1))) == 1
    assert dim(hull([], ambient_dim=2)) == -1
    assert dim(P((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0))) == 2


def test_support_min_examples():
    seg = P((0, 0), (1, 1))
    assert support_min(seg, Covector((-1, 1))) == 0
    assert support_min(P((1, 1)), Covector((1, 1))) == 2
    square = P((0, 0), (1, 0), (0, 1), (1, 1))
    assert support_min(square, Covector((1, 0))) == 0
    with pytest.raises(ValueError, match="empty"):
        support_min(hull([], ambient_dim=2), Covector((1, 0)))


def test_face_examples():
    seg = P((0, 0), (1, 1))
    rec = face(seg, Covector((1, 1)))
    assert {v.coords for v in rec.face.vertices} == {(0, 0)}
    assert rec.min_value == 0

    rec = face(seg, Covector((-1, 1)))
    assert rec.face == seg  # constant on the segment

    tri = P((0, 0), (2, 0), (1, 1))
    rec = face(tri, Covector((0, 1)))
    assert {v.coords for v in rec.face.vertices} == {(0, 0), (2, 0)}


def test_face_idempotent():
    rng = random.Random(31)
    for _ in range(25):
        Q = random_polytope(rng, 3, hi=4)
        a = Covector(tuple(rng.randint(-3, 3) for _ in range(3)))
        if a.is_zero():
            continue
        f1 = face(Q, a).face
        assert face(f1, a).face == f1


def test_minkowski_sum_examples():
    sq = minkowski_sum(P((0, 0), (1, 0)), P((0, 0), (0, 1)))
    assert {v.coords for v in sq.vertices} == {(0, 0), (1, 0), (0, 1), (1, 1)}

    tri = P((0, 0), (2, 0), (1, 1))
    shifted = minkowski_sum(tri, P((3, 5)))
    assert shifted == tri.translate(IntPoint((3, 5)))

    assert minkowski_sum(tri, hull([], ambient_dim=2)).is_empty


def test_face_and_support_of_sum_split():
    rng = random.Random(17)
    for _ in range(30):
        A = random_polytope(rng, 2, hi=4)
        B = random_polytope(rng, 2, hi=4)
        a = Covector(tuple(rng.randint(-3, 3) for _ in range(2)))
        if a.is_zero():
            continue
        S = minkowski_sum(A, B)
        assert support_min(S, a) == support_min(A, a) + support_min(B, a)
        assert face(S, a).face == minkowski_sum(face(A, a).face, face(B, a).face)


def test_restrict_to_index_set_examples():
    tri = P((1, 0), (0, 1), (2, 1))  # z1 + z2(1 + z1^2)
    only2 = restrict_to_index_set(tri, {1})
    assert {v.coords for v in only2.vertices} == {(0, 1)}
    only1 = restrict_to_index_set(tri, {0})
    assert {v.coords for v in only1.vertices} == {(1, 0)}

    square = P((0, 0), (1, 0), (0, 1), (1, 1))
    origin = restrict_to_index_set(square, set())
    assert {v.coords for v in origin.vertices} == {(0, 0)}

    assert restrict_to_index_set(square, {0, 1}) == square


def test_restrict_requires_nonnegative_vertices():
    shifted = P((-1, 0), (0, 1))
    with pytest.raises(ValueError, match="nonnegative"):
        restrict_to_index_set(shifted, {0})


def test_facet_normals_examples():
    square = P((0, 0), (1, 0), (0, 1), (1, 1))
    normals = {rec.normal.comps for rec in facet_normals(square)}
    assert normals == {(1, 0), (0, 1), (-1, 0), (0, -1)}

    tri = P((0, 0), (1, 0), (0, 1))
    normals = {rec.normal.comps for rec in facet_normals(tri)}
    assert normals == {(1, 0), (0, 1), (-1, -1)}

    with pytest.raises(ValueError, match="not full-dimensional"):
        facet_normals(P((0, 0), (1, 1)))


def test_facet_records_are_consistent():
    rng = random.Random(77)
    for _ in range(20):
        d = rng.choice([2, 3, 4])
        Q = random_polytope(rng, d, hi=3, npts=rng.randint(d + 1, d + 4))
        if dim(Q) != d:
            continue
        records = facet_normals(Q)
        covered = set()
        for rec in records:
            assert rec.min_value == support_min(Q, rec.normal)
            assert rec.face == face(Q, rec.normal).face
            assert dim(rec.face) == d - 1
            covered.update(v.coords for v in rec.face.vertices)
        # every vertex is on the boundary, hence on some facet
        assert covered == {v.coords for v in Q.vertices}


def _barycentric_in_hull(p, subset, d):
    """Exact feasibility of p as a convex combination of subset points."""
    from fractions import Fraction

    m = len(subset)
    aug = [[Fraction(subset[j][c]) for j in range(m)] + [Fraction(p[c])]
           for c in range(d)]
    aug.append([Fraction(1)] * m + [Fraction(1)])
    piv_cols = []
    rr = 0
    for c in range(m):
        pr = next((i for i in range(rr, d + 1) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[rr], aug[pr] = aug[pr], aug[rr]
        lead = aug[rr][c]
        aug[rr] = [x / lead for x in aug[rr]]
        for i in range(d + 1):
            if i != rr and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[rr])]
        piv_cols.append(c)
        rr += 1
    if any(all(aug[i][c] == 0 for c in range(m)) and aug[i][m] != 0
           for i in range(d + 1)):
        return False
    lam = [0] * m
    for i, c in enumerate(piv_cols):
        lam[c] = aug[i][m]
    if any(x < 0 for x in lam) or sum(lam) != 1:
        return False
    return all(
        sum(lam[j] * subset[j][c] for j in range(m)) == p[c] for c in range(d)
    )


def _brute_force_extremes(pts, d):
    """p is extreme iff p is in no (d+1)-point hull of the others."""
    from itertools import combinations

    out = []
    for i, p in enumerate(pts):
        others = [q for j, q in enumerate(pts) if j != i]
        size = min(len(others), d + 1)
        inside = any(
            _barycentric_in_hull(p, T, d) for T in combinations(others, size)
        )
        if not inside:
            out.append(p)
    return sorted(out)


def test_hull_matches_brute_force_caratheodory_oracle():
    rng = random.Random(314)
    for _ in range(25):
        d = rng.choice([2, 2, 3, 3])
        pts = sorted({
            tuple(rng.randint(0, 4) for _ in range(d))
            for _ in range(rng.randint(3, 8))
        })
        mine = sorted(v.coords for v in hull([IntPoint(p) for p in pts]).vertices)
        assert mine == _brute_force_extremes(pts, d)


def test_facet_normals_are_primitive_and_duplicate_free():
    rng = random.Random(123)
    for _ in range(15):
        Q = random_polytope(rng, 3, hi=4, npts=rng.randint(4, 8))
        if dim(Q) != 3:
            continue
        records = facet_normals(Q)
        comps = [rec.normal.comps for rec in records]
        assert len(set(comps)) == len(comps)
        for rec in records:
            assert rec.normal.is_primitive()
