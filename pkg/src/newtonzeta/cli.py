"""Command-line front end: JSON jobs in, JSON results out.

A job document names the system (polynomial text or raw supports), the
task, and options; results are deterministic JSON on stdout so they can
be diffed, archived, and used as test fixtures.  Exit codes: 0 success,
2 input error (schema, parse, or dimension problems), 3 internal
assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from .engine import (
    ContributionTrace,
    ZetaProduct,
    euler_ci_torus,
    zeta_deformation,
    zeta_polynomial,
)
from .polytope import dim
from .lattice import LatticeFrame
from .systems import (
    ParseError,
    PolynomialInput,
    SystemSpec,
    format_polynomial,
    newton_polytope,
    parse_polynomial,
)
from .volumes import mixed_volume_of

TASKS = ("deform-origin", "deform-infinity", "polyzeta", "euler", "mixedvol", "info")
SCOPES = ("torus", "affine")


class InputError(Exception):
    """A problem with the job document or its polynomials."""


def _fail(path: str, message: str) -> "InputError":
    return InputError(f"{path}: {message}")


def _expect(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise _fail(path, message)


def _load_polynomial(
    value: Any, path: str, n: int, variables: Sequence[str]
) -> PolynomialInput:
    if isinstance(value, str):
        try:
            return parse_polynomial(value, variables)
        except ParseError as exc:
            raise _fail(path, str(exc)) from exc
    support = value
    if isinstance(value, dict):
        _expect("support" in value, path, "expected a string or a support object")
        support = value["support"]
        path = f"{path}.support"
    _expect(isinstance(support, list) and support, path,
            "expected a nonempty list of exponent vectors")
    exps = []
    for i, vec in enumerate(support):
        _expect(isinstance(vec, list) and len(vec) == n,
                f"{path}[{i}]", f"expected an exponent vector of length {n}")
        for c in vec:
            _expect(isinstance(c, int) and not isinstance(c, bool) and c >= 0,
                    f"{path}[{i}]", "exponents must be nonnegative integers")
        exps.append(tuple(vec))
    _expect(len(set(exps)) == len(exps), path, "duplicate exponent vectors")
    return PolynomialInput.from_dict({e: Fraction(1) for e in exps}, n)


def _permutation_for(variables: Sequence[str], deform_var: str) -> list[int]:
    if deform_var not in variables:
        raise _fail("options.deform_var", f"unknown variable {deform_var!r}")
    others = [i for i, v in enumerate(variables) if v != deform_var]
    return others + [list(variables).index(deform_var)]


def _permute_poly(p: PolynomialInput, perm: Sequence[int]) -> PolynomialInput:
    return PolynomialInput.from_dict(
        {tuple(e[i] for i in perm): c for e, c in p.terms}, p.n, p.source_text
    )


class Job:
    """A validated job document."""

    def __init__(self, data: Any, task: str, overrides: argparse.Namespace):
        _expect(isinstance(data, dict), "$", "job document must be a JSON object")
        _expect(task in TASKS, "task", f"unknown task {task!r}")
        doc_task = data.get("task")
        if doc_task is not None and doc_task != task:
            raise _fail("task", f"document says {doc_task!r}, command says {task!r}")
        self.task = task

        n = data.get("n")
        _expect(isinstance(n, int) and n >= 1, "n", "a positive integer is required")
        self.n = n

        variables = data.get("variables")
        if variables is None:
            variables = [f"z{i+1}" for i in range(n)]
        _expect(
            isinstance(variables, list)
            and len(variables) == n
            and all(isinstance(v, str) for v in variables)
            and len(set(variables)) == n,
            "variables", f"expected {n} distinct variable names",
        )
        self.variables = list(variables)

        options = data.get("options", {})
        _expect(isinstance(options, dict), "options", "expected an object")
        self.trace = bool(options.get("trace", False)) or overrides.trace
        self.assume = bool(options.get("assume_nondegenerate", False))
        deform_var = overrides.deform_var or options.get("deform_var")

        scope = overrides.scope or data.get("scope", "affine")
        _expect(scope in SCOPES, "scope", f"expected one of {SCOPES}")
        self.scope = scope
        self.jobs = overrides.jobs

        raw_constraints = data.get("constraints", [])
        _expect(isinstance(raw_constraints, list), "constraints", "expected a list")
        self.constraints = [
            _load_polynomial(c, f"constraints[{i}]", n, self.variables)
            for i, c in enumerate(raw_constraints)
        ]
        raw_objective = data.get("objective")
        self.objective = (
            _load_polynomial(raw_objective, "objective", n, self.variables)
            if raw_objective is not None
            else None
        )

        if task == "polyzeta":
            _expect(self.objective is not None, "objective",
                    "polyzeta requires an objective")
        elif task in ("deform-origin", "deform-infinity", "euler", "mixedvol"):
            _expect(self.objective is None, "objective",
                    f"{task} takes constraints only")

        if deform_var is not None:
            _expect(isinstance(deform_var, str), "options.deform_var",
                    "expected a variable name")
            perm = _permutation_for(self.variables, deform_var)
            self.variables = [self.variables[i] for i in perm]
            self.constraints = [_permute_poly(p, perm) for p in self.constraints]
            if self.objective is not None:
                self.objective = _permute_poly(self.objective, perm)

    def system(self) -> SystemSpec:
        try:
            return SystemSpec(
                n=self.n,
                constraints=tuple(self.constraints),
                objective=self.objective,
                nondegeneracy_acknowledged=self.assume,
                variables=tuple(self.variables),
            )
        except ValueError as exc:
            raise _fail("constraints", str(exc)) from exc


def _serialize_trace(trace: ContributionTrace, variables: Sequence[str]) -> dict:
    return {
        "stratum": [variables[i] for i in sorted(trace.index_set)],
        "alpha": list(trace.alpha.comps) if trace.alpha is not None else None,
        "m": trace.m,
        "exponent": trace.exponent,
        "face_dims": list(trace.face_dims),
    }


def _zeta_result(
    job: Job,
    product: ZetaProduct,
    traces: list[ContributionTrace],
    assumptions: list[str],
) -> dict:
    result = {
        "task": job.task,
        "scope": job.scope,
        "factors": [{"m": m, "exponent": e} for m, e in product.factors],
        "pretty": product.pretty(),
        "degree": product.degree(),
        "assumptions": assumptions,
    }
    if not job.assume:
        result["assumptions_unacknowledged"] = True
    if job.trace:
        result["traces"] = [_serialize_trace(t, job.variables) for t in traces]
    return result


def run(job: Job) -> dict:
    """Dispatch a validated job and build its result document."""
    if job.task in ("deform-origin", "deform-infinity"):
        spec = job.system()
        mode = "origin" if job.task == "deform-origin" else "infinity"
        product, traces = zeta_deformation(
            spec, mode=mode, scope=job.scope, jobs=job.jobs
        )
        hypothesis = (
            "sigma-non-degenerate" if mode == "origin"
            else "sigma-non-degenerate at infinity"
        )
        return _zeta_result(job, product, traces, [hypothesis])

    if job.task == "polyzeta":
        spec = job.system()
        product, traces = zeta_polynomial(spec, scope=job.scope, jobs=job.jobs)
        return _zeta_result(job, product, traces, [
            "non-degenerate (objective with constraints)",
            "non-degenerate (constraints)",
        ])

    polys = [newton_polytope(p) for p in job.constraints]

    if job.task == "euler":
        if len(polys) > job.n:
            raise _fail("constraints", "euler needs at most n constraints")
        value = euler_ci_torus(polys, job.n)
        result = {
            "task": "euler",
            "value": value,
            "assumptions": ["non-degenerate (constraints)"],
        }
        if not job.assume:
            result["assumptions_unacknowledged"] = True
        return result

    if job.task == "mixedvol":
        if len(polys) != job.n:
            raise _fail("constraints",
                        f"mixedvol needs exactly n = {job.n} constraints")
        value = mixed_volume_of(polys, LatticeFrame.standard(job.n))
        return {"task": "mixedvol", "value": value, "assumptions": []}

    if job.task == "info":
        def describe(p: PolynomialInput) -> dict:
            P = newton_polytope(p)
            return {
                "text": format_polynomial(p, job.variables),
                "terms": len(p.terms),
                "newton_vertices": [list(v.coords) for v in P.vertices],
                "dim": dim(P),
            }

        result = {
            "task": "info",
            "n": job.n,
            "variables": job.variables,
            "mode": "polynomial" if job.objective is not None else "deformation",
            "constraints": [describe(p) for p in job.constraints],
        }
        if job.objective is not None:
            result["objective"] = describe(job.objective)
        return result

    raise AssertionError(f"unhandled task {job.task!r}")


def _parse_args(argv: Sequence[str] | None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="newton-zeta",
        description="Monodromy zeta-functions from Newton polytopes, exactly.",
    )
    parser.add_argument("task", choices=TASKS)
    parser.add_argument("input", help="job document (JSON file, or - for stdin)")
    parser.add_argument("--scope", choices=SCOPES, default=None,
                        help="torus part only, or the full affine stratification")
    parser.add_argument("--trace", action="store_true",
                        help="include per-factor contribution traces")
    parser.add_argument("--jobs", type=int, default=None, metavar="N",
                        help="evaluate strata with N parallel workers")
    parser.add_argument("--deform-var", default=None, metavar="NAME",
                        help="permute this variable into the last position")
    parser.add_argument("--pretty", action="store_true",
                        help="echo the human-readable product on stderr")
    return parser.parse_args(argv)


def main(argv: Sequence[str] | None = None) -> int:
    args = _parse_args(argv)
    try:
        if args.input == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.input, "r", encoding="utf-8") as fh:
                data = json.load(fh)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return 2

    try:
        job = Job(data, args.task, args)
        result = run(job)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - contract: 3 on internal failure
        print(f"internal error: {exc}", file=sys.stderr)
        return 3

    sys.stdout.write(json.dumps(result, indent=2) + "\n")
    if args.pretty and "pretty" in result:
        print(result["pretty"], file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
