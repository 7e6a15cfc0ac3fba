"""Parsing, Newton polytopes, restriction, the cone construction."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from newtonzeta import (
    ParseError,
    PolynomialInput,
    SystemSpec,
    cone_system,
    fiber_polytopes,
    format_polynomial,
    minkowski_sum,
    newton_polytope,
    parse_polynomial,
    restrict_system,
    restrict_to_index_set,
)


def test_parse_expands_products():
    p = parse_polynomial("z1 + z2*(1+z1^2)", ["z1", "z2"])
    assert p.as_dict() == {(1, 0): 1, (0, 1): 1, (2, 1): 1}


def test_parse_constant():
    p = parse_polynomial("3", ["z1", "z2"])
    assert p.as_dict() == {(0, 0): 3}


def test_parse_zero_polynomial_rejected():
    with pytest.raises(ParseError, match="zero polynomial"):
        parse_polynomial("z1 - z1", ["z1"])


def test_parse_rational_coefficients():
    p = parse_polynomial("1/2*z1 + 3/4", ["z1"])
    assert p.as_dict() == {(1,): Fraction(1, 2), (0,): Fraction(3, 4)}


def test_parse_coefficient_variable_juxtaposition():
    p = parse_polynomial("3z1^2 + 2 z2", ["z1", "z2"])
    assert p.as_dict() == {(2, 0): 3, (0, 1): 2}


def test_parse_variable_juxtaposition_rejected():
    with pytest.raises(ParseError, match="implicit multiplication"):
        parse_polynomial("z1 z2", ["z1", "z2"])


def test_parse_unknown_variable_reports_position():
    with pytest.raises(ParseError) as err:
        parse_polynomial("z1 + bad", ["z1"])
    assert err.value.position == 5


def test_parse_negative_exponent_rejected():
    with pytest.raises(ParseError, match="negative exponent"):
        parse_polynomial("z1^-2", ["z1"])


def test_parse_syntax_error_reports_position():
    with pytest.raises(ParseError) as err:
        parse_polynomial("z1 + * z2", ["z1", "z2"])
    assert err.value.position == 5


def test_parse_unbalanced_parenthesis():
    with pytest.raises(ParseError):
        parse_polynomial("(z1 + z2", ["z1", "z2"])


def test_parse_leading_minus():
    p = parse_polynomial("-z1 + 2", ["z1"])
    assert p.as_dict() == {(1,): -1, (0,): 2}


def test_parse_parenthesized_power():
    p = parse_polynomial("(1 + z1)^2", ["z1"])
    assert p.as_dict() == {(0,): 1, (1,): 2, (2,): 1}


def test_parse_numeric_power_is_a_coefficient():
    p = parse_polynomial("2^3*z1", ["z1"])
    assert p.as_dict() == {(1,): 8}


def test_parse_zero_denominator_rejected():
    with pytest.raises(ParseError, match="zero denominator"):
        parse_polynomial("1/0 + z1", ["z1"])


@st.composite
def small_polynomials(draw):
    n = draw(st.integers(1, 3))
    nterms = draw(st.integers(1, 5))
    terms = {}
    for _ in range(nterms):
        exps = tuple(draw(st.integers(0, 4)) for _ in range(n))
        coeff = Fraction(
            draw(st.integers(-9, 9).filter(lambda c: c != 0)),
            draw(st.integers(1, 9)),
        )
        terms[exps] = coeff
    return PolynomialInput.from_dict(terms, n)


@settings(max_examples=60, deadline=None)
@given(small_polynomials())
def test_format_parse_round_trip(p):
    variables = [f"z{i+1}" for i in range(p.n)]
    text = format_polynomial(p, variables)
    again = parse_polynomial(text, variables)
    assert again.as_dict() == p.as_dict()


def test_newton_polytope_examples():
    p = parse_polynomial("z1 + z2 + z1^2*z2", ["z1", "z2"])
    assert {v.coords for v in newton_polytope(p).vertices} == {(1, 0), (0, 1), (2, 1)}

    mono = parse_polynomial("z1^3*z2", ["z1", "z2"])
    assert {v.coords for v in newton_polytope(mono).vertices} == {(3, 1)}

    simplex = parse_polynomial("1 + z1 + z2", ["z1", "z2"])
    assert {v.coords for v in newton_polytope(simplex).vertices} == {(0, 0), (1, 0), (0, 1)}


def test_newton_polytope_of_product_is_minkowski_sum():
    rng = random.Random(8)
    variables = ["z1", "z2"]

    def rand_poly():
        terms = {}
        for _ in range(rng.randint(1, 4)):
            exps = (rng.randint(0, 3), rng.randint(0, 3))
            terms[exps] = terms.get(exps, 0) + Fraction(rng.randint(1, 5))
        return PolynomialInput.from_dict(terms, 2)

    for _ in range(20):
        p, q = rand_poly(), rand_poly()
        product_terms: dict[tuple[int, ...], Fraction] = {}
        for ep, cp in p.terms:
            for eq, cq in q.terms:
                e = tuple(a + b for a, b in zip(ep, eq))
                product_terms[e] = product_terms.get(e, Fraction(0)) + cp * cq
        product = PolynomialInput.from_dict(product_terms, 2)
        assert newton_polytope(product) == minkowski_sum(
            newton_polytope(p), newton_polytope(q)
        )


def test_restrict_system_keeps_meeting_constraints():
    spec = SystemSpec(
        n=2,
        constraints=(parse_polynomial("z1 + z2*(1+z1^2)", ["z1", "z2"]),),
    )
    rs = restrict_system(spec, {1})
    assert rs.k_of_I == 1
    assert rs.indices == (0,)
    assert {v.coords for v in rs.polytopes[0].vertices} == {(0, 1)}


def test_restrict_system_drops_missing_constraints():
    spec = SystemSpec.from_supports(2, [[[1, 0]]])
    rs = restrict_system(spec, {1})
    assert rs.k_of_I == 0
    assert rs.indices == ()


def test_restrict_system_full_index_set_is_identity():
    spec = SystemSpec.from_supports(3, [[[1, 0, 0], [0, 1, 1]], [[0, 0, 1]]])
    rs = restrict_system(spec, {0, 1, 2})
    assert rs.k_of_I == 2
    for c, P in zip(spec.constraints, rs.polytopes):
        assert P == newton_polytope(c)


def test_restrict_system_ordering_is_increasing_subsequence():
    rng = random.Random(91)
    for _ in range(15):
        n = 3
        k = 2
        spec = SystemSpec.from_supports(
            n,
            [[[rng.randint(0, 2) for _ in range(n)]
              for _ in range(rng.randint(1, 3))] for _ in range(k)],
        )
        for idx in [{0}, {1}, {2}, {0, 2}, {0, 1, 2}]:
            rs = restrict_system(spec, idx)
            assert list(rs.indices) == sorted(rs.indices)
            survivors = [
                j for j in range(k)
                if not restrict_to_index_set(
                    newton_polytope(spec.constraints[j]), idx
                ).is_empty
            ]
            assert list(rs.indices) == survivors


def test_cone_system_single_variable():
    spec = SystemSpec(n=1, constraints=(), objective=parse_polynomial("z1", ["z1"]))
    lifted = cone_system(spec)
    assert lifted.n == 2
    assert len(lifted.constraints) == 1
    assert lifted.objective is None
    poly = newton_polytope(lifted.constraints[0])
    assert {v.coords for v in poly.vertices} == {(1, 0), (0, 1)}


def test_cone_system_over_a_point():
    spec = SystemSpec(
        n=2, constraints=(), objective=parse_polynomial("z1*z2", ["z1", "z2"])
    )
    lifted = cone_system(spec)
    poly = newton_polytope(lifted.constraints[0])
    assert {v.coords for v in poly.vertices} == {(1, 1, 0), (0, 0, 1)}


def test_cone_system_keeps_constraints_and_names():
    spec = SystemSpec(
        n=2,
        constraints=(parse_polynomial("z1 + z2*(1+z1^2)", ["z1", "z2"]),),
        objective=parse_polynomial("z2", ["z1", "z2"]),
        variables=("z1", "z2"),
    )
    lifted = cone_system(spec)
    assert lifted.n == 3
    assert len(lifted.constraints) == 2
    assert lifted.variables is not None and len(lifted.variables) == 3
    last = lifted.constraints[-1]
    assert last.as_dict() == {(0, 1, 0): 1, (0, 0, 1): -1}


def test_cone_system_requires_objective():
    spec = SystemSpec.from_supports(2, [[[1, 0]]])
    with pytest.raises(ValueError, match="objective"):
        cone_system(spec)


def test_fiber_polytopes_projections():
    spec = SystemSpec(
        n=2,
        constraints=(parse_polynomial("z1 + z2*(1+z1^2)", ["z1", "z2"]),),
    )
    fibers = fiber_polytopes(spec)
    assert len(fibers) == 1
    assert {v.coords for v in fibers[0].vertices} == {(0,), (2,)}

    mono = SystemSpec.from_supports(2, [[[1, 1]]])
    assert {v.coords for v in fiber_polytopes(mono)[0].vertices} == {(1,)}

    const = SystemSpec.from_supports(2, [[[0, 0]]])
    assert {v.coords for v in fiber_polytopes(const)[0].vertices} == {(0,)}


def test_system_spec_validates_constraint_count():
    with pytest.raises(ValueError, match="constraints"):
        SystemSpec.from_supports(2, [[[1, 0]], [[0, 1]]])


def test_raw_support_mode_matches_parsed_mode():
    parsed = SystemSpec(
        n=2, constraints=(parse_polynomial("z1 + z2 + z1^2*z2", ["z1", "z2"]),)
    )
    raw = SystemSpec.from_supports(2, [[[1, 0], [0, 1], [2, 1]]])
    assert newton_polytope(parsed.constraints[0]) == newton_polytope(raw.constraints[0])
