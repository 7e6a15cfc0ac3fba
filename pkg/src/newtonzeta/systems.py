"""Input assembly: polynomials, their Newton polytopes, and systems.

Polynomials arrive either as text in a small arithmetic grammar or as
raw exponent supports with dummy coefficients.  The zeta pipeline only
ever consumes supports; coefficients are parsed, stored and printed so
inputs round-trip, and the non-degeneracy hypotheses under which the
results are valid stay an acknowledged input assumption rather than
something this code attempts to certify.

Grammar (whitespace insignificant)::

    expr   = ["+" / "-"] term *(("+" / "-") term)
    term   = factor *("*" factor / implicit)   ; implicit multiplication is
                                               ; allowed only as coefficient
                                               ; followed by a variable
    factor = base ["^" uint]
    base   = rational / varname / "(" expr ")"
    rational = uint ["/" uint]
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .lattice import IntPoint
from .polytope import LatticePolytope, hull, restrict_to_index_set

__all__ = [
    "ParseError",
    "PolynomialInput",
    "SystemSpec",
    "RestrictedSystem",
    "parse_polynomial",
    "format_polynomial",
    "newton_polytope",
    "restrict_system",
    "cone_system",
    "fiber_polytopes",
]


class ParseError(ValueError):
    """Syntax or semantic error in polynomial text, with a position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class PolynomialInput:
    """A polynomial as a map from exponent vectors to nonzero coefficients."""

    terms: tuple[tuple[tuple[int, ...], Fraction], ...]
    n: int
    source_text: str | None = None

    def __post_init__(self):
        if not self.terms:
            raise ValueError("polynomial must have at least one term")
        seen = set()
        for exps, coeff in self.terms:
            if len(exps) != self.n:
                raise ValueError("exponent vector length does not match n")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            if coeff == 0:
                raise ValueError("zero coefficient stored")
            if exps in seen:
                raise ValueError("duplicate exponent vector")
            seen.add(exps)

    @classmethod
    def from_dict(
        cls,
        terms: Mapping[tuple[int, ...], Fraction | int],
        n: int,
        source_text: str | None = None,
    ) -> "PolynomialInput":
        items = tuple(
            sorted((tuple(e), Fraction(c)) for e, c in terms.items() if c != 0)
        )
        return cls(items, n, source_text)

    def as_dict(self) -> dict[tuple[int, ...], Fraction]:
        return {e: c for e, c in self.terms}

    def support(self) -> list[IntPoint]:
        return [IntPoint(e) for e, _ in self.terms]


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_OPS = set("+-*^()/")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("NUM", text[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("NAME", text[i:j], i))
            i = j
            continue
        if c in _OPS:
            tokens.append(("OP", c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(("END", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = list(variables)
        self.var_index = {v: i for i, v in enumerate(variables)}
        self.n = len(self.variables)

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, val, at = self.next()
        if kind != "OP" or val != op:
            raise ParseError(f"expected {op!r}", at)

    # polynomial values are dicts {exponent tuple: Fraction}

    def parse(self) -> dict[tuple[int, ...], Fraction]:
        value = self.parse_expr()
        kind, val, at = self.peek()
        if kind != "END":
            raise ParseError(f"unexpected {val!r}", at)
        return value

    def parse_expr(self) -> dict[tuple[int, ...], Fraction]:
        kind, val, _ = self.peek()
        negate = False
        if kind == "OP" and val in "+-":
            self.next()
            negate = val == "-"
        value = self.parse_term()
        if negate:
            value = {e: -c for e, c in value.items()}
        while True:
            kind, val, _ = self.peek()
            if kind == "OP" and val in "+-":
                self.next()
                rhs = self.parse_term()
                sign = 1 if val == "+" else -1
                for e, c in rhs.items():
                    value[e] = value.get(e, Fraction(0)) + sign * c
                    if value[e] == 0:
                        del value[e]
            else:
                return value

    def parse_term(self) -> dict[tuple[int, ...], Fraction]:
        value, numeric = self.parse_factor()
        while True:
            kind, val, at = self.peek()
            if kind == "OP" and val == "*":
                self.next()
                rhs, numeric = self.parse_factor()
                value = self._mul(value, rhs)
            elif kind == "NAME" and numeric:
                # coefficient directly followed by a variable
                rhs, numeric = self.parse_factor()
                value = self._mul(value, rhs)
            elif kind in ("NAME", "NUM") or (kind == "OP" and val == "("):
                raise ParseError("implicit multiplication requires '*'", at)
            else:
                return value

    def parse_factor(self) -> tuple[dict[tuple[int, ...], Fraction], bool]:
        value, numeric = self.parse_base()
        kind, val, _ = self.peek()
        if kind == "OP" and val == "^":
            self.next()
            kind, val, at = self.peek()
            if kind == "OP" and val == "-":
                raise ParseError("negative exponent", at)
            kind, val, at = self.next()
            if kind != "NUM":
                raise ParseError("expected a nonnegative integer exponent", at)
            value = self._pow(value, int(val))
        return value, numeric

    def parse_base(self) -> tuple[dict[tuple[int, ...], Fraction], bool]:
        kind, val, at = self.next()
        if kind == "NUM":
            num = int(val)
            kind2, val2, _ = self.peek()
            if kind2 == "OP" and val2 == "/":
                self.next()
                kind3, val3, at3 = self.next()
                if kind3 != "NUM":
                    raise ParseError("expected an integer denominator", at3)
                den = int(val3)
                if den == 0:
                    raise ParseError("zero denominator", at3)
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            zero = tuple(0 for _ in range(self.n))
            return ({zero: coeff} if coeff else {}), True
        if kind == "NAME":
            idx = self.var_index.get(val)
            if idx is None:
                raise ParseError(f"unknown variable {val!r}", at)
            exps = tuple(1 if i == idx else 0 for i in range(self.n))
            return {exps: Fraction(1)}, False
        if kind == "OP" and val == "(":
            value = self.parse_expr()
            self.expect_op(")")
            return value, False
        raise ParseError(f"unexpected {val or kind!r}", at)

    @staticmethod
    def _mul(
        a: dict[tuple[int, ...], Fraction], b: dict[tuple[int, ...], Fraction]
    ) -> dict[tuple[int, ...], Fraction]:
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                c = out.get(e, Fraction(0)) + ca * cb
                if c:
                    out[e] = c
                elif e in out:
                    del out[e]
        return out

    def _pow(
        self, a: dict[tuple[int, ...], Fraction], k: int
    ) -> dict[tuple[int, ...], Fraction]:
        zero = tuple(0 for _ in range(self.n))
        result = {zero: Fraction(1)}
        for _ in range(k):
            result = self._mul(result, a)
        return result


def parse_polynomial(text: str, variables: Sequence[str]) -> PolynomialInput:
    """Parse, expand and collect a polynomial over the given variables."""
    if len(set(variables)) != len(list(variables)):
        raise ValueError("duplicate variable names")
    parser = _Parser(text, variables)
    terms = parser.parse()
    if not terms:
        raise ParseError("zero polynomial", 0)
    return PolynomialInput.from_dict(terms, len(list(variables)), source_text=text)


def format_polynomial(p: PolynomialInput, variables: Sequence[str]) -> str:
    """Canonical text for a polynomial; reparses to the identical term map."""
    if len(list(variables)) != p.n:
        raise ValueError("variable list length does not match polynomial")

    def monomial(exps: tuple[int, ...]) -> str:
        parts = []
        for name, e in zip(variables, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    pieces = []
    items = sorted(p.terms, key=lambda item: item[0], reverse=True)
    for i, (exps, coeff) in enumerate(items):
        mono = monomial(exps)
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if i == 0:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)


# ---------------------------------------------------------------------------
# systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SystemSpec:
    """The input system: constraints, optional objective, assumptions.

    With no objective the system describes a one-parameter deformation in
    the last variable; with an objective it describes that polynomial
    restricted to the complete intersection cut out by the constraints.
    """

    n: int
    constraints: tuple[PolynomialInput, ...]
    objective: PolynomialInput | None = None
    nondegeneracy_acknowledged: bool = False
    variables: tuple[str, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if self.n < 1:
            raise ValueError("ambient dimension must be positive")
        k = len(self.constraints)
        if not 0 <= k <= self.n - 1:
            raise ValueError(
                f"need 0 <= k <= n-1 constraints, got k={k} with n={self.n}"
            )
        for c in self.constraints:
            if c.n != self.n:
                raise ValueError("constraint dimension does not match n")
        if self.objective is not None and self.objective.n != self.n:
            raise ValueError("objective dimension does not match n")
        if self.variables is not None:
            vars_t = tuple(self.variables)
            if len(vars_t) != self.n:
                raise ValueError("variable list length does not match n")
            object.__setattr__(self, "variables", vars_t)

    @property
    def mode(self) -> str:
        return "polynomial" if self.objective is not None else "deformation"

    @property
    def k(self) -> int:
        return len(self.constraints)

    @classmethod
    def from_supports(
        cls,
        n: int,
        constraint_supports: Sequence[Sequence[Sequence[int]]],
        objective_support: Sequence[Sequence[int]] | None = None,
        nondegeneracy_acknowledged: bool = False,
        variables: Sequence[str] | None = None,
    ) -> "SystemSpec":
        """Raw-support entry: exponent vectors with dummy coefficients 1."""

        def poly(support: Sequence[Sequence[int]]) -> PolynomialInput:
            return PolynomialInput.from_dict(
                {tuple(e): Fraction(1) for e in support}, n
            )

        return cls(
            n=n,
            constraints=tuple(poly(s) for s in constraint_supports),
            objective=poly(objective_support) if objective_support is not None else None,
            nondegeneracy_acknowledged=nondegeneracy_acknowledged,
            variables=tuple(variables) if variables is not None else None,
        )


@dataclass(frozen=True)
class RestrictedSystem:
    """A system cut down to a coordinate subspace (0-based index set)."""

    index_set: frozenset[int]
    indices: tuple[int, ...]
    polytopes: tuple[LatticePolytope, ...]
    objective_restriction: LatticePolytope | None
    n: int

    def __post_init__(self):
        object.__setattr__(self, "index_set", frozenset(self.index_set))
        if list(self.indices) != sorted(self.indices):
            raise ValueError("surviving constraint indices must be increasing")
        for P in self.polytopes:
            if P.is_empty:
                raise ValueError("restricted constraint polytopes must be nonempty")

    @property
    def k_of_I(self) -> int:
        return len(self.polytopes)


def newton_polytope(p: PolynomialInput) -> LatticePolytope:
    """Convex hull of the exponent vectors of the nonzero terms."""
    return hull(p.support())


def restrict_system(spec: SystemSpec, index_set: Iterable[int]) -> RestrictedSystem:
    """Keep the constraints whose polytopes meet the coordinate subspace.

    Surviving constraints retain their original order; the objective is
    restricted too when present, and its restriction may be empty.
    """
    idx = frozenset(index_set)
    if not idx <= set(range(spec.n)):
        raise ValueError("index set out of range")
    indices = []
    polys = []
    for j, c in enumerate(spec.constraints):
        restricted = restrict_to_index_set(newton_polytope(c), idx)
        if not restricted.is_empty:
            indices.append(j)
            polys.append(restricted)
    obj = None
    if spec.objective is not None:
        obj = restrict_to_index_set(newton_polytope(spec.objective), idx)
    return RestrictedSystem(
        index_set=idx,
        indices=tuple(indices),
        polytopes=tuple(polys),
        objective_restriction=obj,
        n=spec.n,
    )


def _fresh_variable(existing: Sequence[str] | None) -> str:
    taken = set(existing or ())
    for name in ("t", "w", "u", "s"):
        if name not in taken:
            return name
    i = 0
    while f"t{i}" in taken:
        i += 1
    return f"t{i}"


def cone_system(spec: SystemSpec) -> SystemSpec:
    """Trade the objective for one extra constraint in one extra variable.

    The constraints are lifted unchanged and the objective F becomes the
    constraint F - z_new, whose Newton polytope is the height-1 cone over
    the objective's polytope; that identity is asserted structurally.
    """
    if spec.objective is None:
        raise ValueError("cone_system requires an objective")
    n1 = spec.n + 1

    def lift(p: PolynomialInput) -> PolynomialInput:
        return PolynomialInput.from_dict(
            {e + (0,): c for e, c in p.terms}, n1, p.source_text
        )

    lifted = [lift(c) for c in spec.constraints]
    new_terms = {e + (0,): c for e, c in spec.objective.terms}
    apex = tuple(0 for _ in range(spec.n)) + (1,)
    new_terms[apex] = Fraction(-1)
    last = PolynomialInput.from_dict(new_terms, n1)

    cone_poly = newton_polytope(last)
    expected = hull(
        [IntPoint(e + (0,)) for e, _ in spec.objective.terms] + [IntPoint(apex)]
    )
    assert cone_poly == expected, "cone polytope identity violated"

    variables = None
    if spec.variables is not None:
        variables = spec.variables + (_fresh_variable(spec.variables),)
    return SystemSpec(
        n=n1,
        constraints=tuple(lifted) + (last,),
        objective=None,
        nondegeneracy_acknowledged=spec.nondegeneracy_acknowledged,
        variables=variables,
    )


def fiber_polytopes(spec: SystemSpec) -> list[LatticePolytope]:
    """Newton polytopes of a generic slice in the deformation parameter.

    Projects each constraint support along the last coordinate; valid for
    generic parameter values, where every projected monomial keeps a
    nonzero coefficient.
    """
    if spec.objective is not None:
        raise ValueError("fiber_polytopes applies to deformation mode only")
    out = []
    for c in spec.constraints:
        projected = [IntPoint(e[:-1]) for e, _ in c.terms]
        out.append(hull(projected))
    return out
