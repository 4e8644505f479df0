"""Corpus files, invariant-package assembly and the verification runner.

A corpus is a JSON manifest of cases; each case packages the inputs of one
identity check together with its expected outcome.  The runner recomputes
everything from first principles:

* ``CurvePair``: both curves are analyzed by curvelab, their duals computed
  by dualgeom, the two intersection chis counted by certified elimination,
  and the flop identity evaluated in both forms.
* ``PackagePair``: invariant packages come from files, inline JSON or
  standard constructions (hypersurfaces and linear spaces via charclass);
  slice chis are resolved from package data or complete-intersection closed
  forms, never from the identity being tested.
* ``ClassicalPlucker``: the dual-count formulas, optionally cross-checked on
  an explicit curve through the polar oracle.
* ``QuadricPair``: the quadric specialization of the identity.
* ``SolveUnknown``: a one-unknown identity instance with its exact solution.

Reports are deterministic: cases run in manifest order, rationals serialize
as "p/q" strings, and timing fields can be suppressed for byte-identical
re-runs.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import charclass, curvelab, dualgeom, elimination, flopcalc
from .curvelab import PRIMAL_VARS, PlaneCurve
from .errors import (
    DualisError,
    MissingFile,
    NotTransversal,
    SchemaError,
)
from .exact import MultiPoly, format_rational, parse_rational, parse_poly
from .flopcalc import CONORMAL, INTRO, IdentityInstance, VarietyInvariants

CASE_KINDS = (
    "CurvePair",
    "PackagePair",
    "ClassicalPlucker",
    "QuadricPair",
    "SolveUnknown",
)

#: deterministic schedule of candidate slice-line coefficients
_LINE_SCHEDULE = (
    (0, 0, 1), (0, 1, 0), (1, 0, 0),
    (1, 1, 1), (1, -1, 1), (1, 1, -1),
    (1, 2, 3), (2, 1, 5), (1, 3, -2),
    (5, -2, 1), (1, 5, 7), (3, -1, 2),
    (2, 7, -3), (1, -4, 9), (3, 5, 11),
)


@dataclass(frozen=True)
class CorpusCase:
    case_id: str
    kind: str
    inputs: dict
    expected: dict = field(default_factory=dict)
    notes: str = ""

    def as_dict(self) -> dict:
        out = {"id": self.case_id, "kind": self.kind, "inputs": self.inputs}
        if self.expected:
            out["expected"] = self.expected
        if self.notes:
            out["notes"] = self.notes
        return out


@dataclass
class CaseResult:
    case_id: str
    status: str  # pass | fail | error
    details: dict
    wall_ms: Optional[float] = None


@dataclass
class RunReport:
    results: list
    include_timing: bool = True

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.status == "pass")

    @property
    def failed(self) -> int:
        return sum(1 for r in self.results if r.status == "fail")

    @property
    def errored(self) -> int:
        return sum(1 for r in self.results if r.status == "error")

    def as_dict(self) -> dict:
        cases = []
        for r in self.results:
            entry = {"id": r.case_id, "status": r.status, "details": r.details}
            if self.include_timing and r.wall_ms is not None:
                entry["wall_ms"] = round(r.wall_ms, 3)
            cases.append(entry)
        return {
            "summary": {
                "total": len(self.results),
                "pass": self.passed,
                "fail": self.failed,
                "error": self.errored,
            },
            "cases": cases,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"


# ---------------------------------------------------------------------------
# schema-checked loading
# ---------------------------------------------------------------------------

def _require(mapping: dict, key: str, types, where: str):
    if key not in mapping:
        raise SchemaError(f"{where}: missing key", field=key)
    value = mapping[key]
    if not isinstance(value, types):
        raise SchemaError(f"{where}: wrong type for {key!r}", field=key)
    return value


def package_from_dict(data: dict, where: str = "package") -> VarietyInvariants:
    label = _require(data, "label", str, where)
    n = _require(data, "n", int, where)
    dim = _require(data, "dim", int, where)
    degree = _require(data, "degree", int, where)
    c0m = _require(data, "c0m", int, where)
    slices = _require(data, "chi_slices", list, where)
    transversal = _require(data, "transversal", bool, where)
    if len(slices) != n + 1 or not all(isinstance(s, int) for s in slices):
        raise SchemaError(
            f"{where}: chi_slices must be a list of {n + 1} integers",
            field="chi_slices",
        )
    try:
        pkg = VarietyInvariants(
            label=label, n=n, dim=dim, degree=degree, c0m=c0m,
            chi_slices=tuple(slices), transversality_certified=transversal,
        )
        pkg.validate_slices()
    except DualisError as exc:
        raise SchemaError(f"{where}: {exc}", field="chi_slices") from exc
    return pkg


def load_package(path) -> VarietyInvariants:
    path = Path(path)
    if not path.exists():
        raise MissingFile(str(path))
    return package_from_dict(json.loads(path.read_text()), where=str(path))


def save_package(pkg: VarietyInvariants, path):
    Path(path).write_text(json.dumps(pkg.as_dict(), indent=2) + "\n")


def load_corpus(path) -> list:
    """Load a corpus manifest (a JSON file or a directory containing one)."""
    path = Path(path)
    if path.is_dir():
        path = path / "manifest.json"
    if not path.exists():
        raise MissingFile(str(path))
    data = json.loads(path.read_text())
    raw_cases = _require(data, "cases", list, str(path))
    cases = []
    seen = set()
    for i, raw in enumerate(raw_cases):
        where = f"{path}[{i}]"
        if not isinstance(raw, dict):
            raise SchemaError(f"{where}: case must be an object", field="cases")
        case_id = _require(raw, "id", str, where)
        kind = _require(raw, "kind", str, where)
        if kind not in CASE_KINDS:
            raise SchemaError(f"{where}: unknown kind {kind!r}", field="kind")
        if case_id in seen:
            raise SchemaError(f"{where}: duplicate case id {case_id!r}", field="id")
        seen.add(case_id)
        inputs = _require(raw, "inputs", dict, where)
        _check_referenced_files(inputs, path.parent, where)
        cases.append(CorpusCase(
            case_id=case_id,
            kind=kind,
            inputs=inputs,
            expected=raw.get("expected", {}),
            notes=raw.get("notes", ""),
        ))
    return cases


def _check_referenced_files(obj, root: Path, where: str):
    if isinstance(obj, dict):
        for key, value in obj.items():
            if key == "file":
                if not (root / value).exists():
                    raise MissingFile(f"{where}: {root / value}")
            else:
                _check_referenced_files(value, root, where)
    elif isinstance(obj, list):
        for value in obj:
            _check_referenced_files(value, root, where)


def save_report(report: RunReport, path):
    Path(path).write_text(report.to_json())


def load_report(path) -> dict:
    path = Path(path)
    if not path.exists():
        raise MissingFile(str(path))
    return json.loads(path.read_text())


# ---------------------------------------------------------------------------
# resolving case inputs
# ---------------------------------------------------------------------------

def resolve_curve(spec, root: Path, where: str) -> PlaneCurve:
    if isinstance(spec, dict) and "file" in spec:
        path = root / spec["file"]
        if not path.exists():
            raise MissingFile(f"{where}: {path}")
        text = path.read_text().strip()
    elif isinstance(spec, dict) and "poly" in spec:
        text = spec["poly"]
    else:
        raise SchemaError(f"{where}: curve spec needs 'file' or 'poly'", field="curve")
    return PlaneCurve(parse_poly(text, PRIMAL_VARS))


def resolve_package(spec, root: Path, where: str) -> VarietyInvariants:
    if not isinstance(spec, dict):
        raise SchemaError(f"{where}: package spec must be an object", field="package")
    if "file" in spec:
        return load_package(root / spec["file"])
    if "inline" in spec:
        return package_from_dict(spec["inline"], where)
    if "standard" in spec:
        return standard_package(spec["standard"], where)
    raise SchemaError(
        f"{where}: package spec needs 'file', 'inline' or 'standard'", field="package"
    )


def standard_package(spec: dict, where: str = "standard") -> VarietyInvariants:
    """Packages of standard varieties, built by charclass at run time."""
    kind = _require(spec, "type", str, where)
    if kind == "hypersurface":
        return charclass.hypersurface_package(spec["n"], spec["d"], spec.get("label"))
    if kind == "linear":
        return charclass.linear_space_package(spec["n"], spec["m"], spec.get("label"))
    if kind == "linear_dual":
        n, m = spec["n"], spec["m"]
        return charclass.linear_space_package(
            n, n - m - 1, spec.get("label") or f"dual of P^{m} in P^{n}"
        )
    if kind == "quadric_dual":
        # the dual of a smooth quadric is again a smooth quadric
        n = spec["n"]
        return charclass.hypersurface_package(
            n, 2, spec.get("label") or f"dual of the smooth quadric in P^{n}"
        )
    if kind == "hypersurface_dual":
        # dual of a smooth degree-d hypersurface: a hypersurface whose c0m
        # and degree come from the package corollaries (no slice data)
        src = charclass.hypersurface_package(spec["n"], spec["d"])
        codim = flopcalc.detect_dual_codim(src)
        return VarietyInvariants(
            label=spec.get("label")
            or f"dual of the smooth degree-{spec['d']} hypersurface in P^{spec['n']}",
            n=src.n,
            dim=src.n - codim,
            degree=flopcalc.dual_degree_from_invariants(src, 0, codim),
            c0m=flopcalc.dual_c0m(src, 0, dual_codim=codim),
            chi_slices=None,
            transversality_certified=True,
        )
    raise SchemaError(f"{where}: unknown standard package type {kind!r}", field="type")


def resolve_chi(spec, packages: dict, where: str, side: str | None = "dual") -> int:
    """Resolve a chi input: a literal, a package slice, a complete
    intersection, or (for identity pairs) an empty intersection justified by
    dimension count on the named side."""
    if isinstance(spec, int):
        return spec
    if isinstance(spec, dict) and "slice" in spec:
        name, j = spec["slice"]
        if name not in packages:
            raise SchemaError(f"{where}: no package named {name!r}", field="chi")
        pkg = packages[name]
        pkg.validate_slices()
        if not 0 <= j <= pkg.n:
            raise SchemaError(f"{where}: slice index {j} outside 0..{pkg.n}",
                              field="chi")
        return pkg.chi_slices[j]
    if isinstance(spec, dict) and "ci" in spec:
        return charclass.chi_smooth_complete_intersection(
            spec["ci"]["n"], spec["ci"]["degrees"]
        )
    if isinstance(spec, dict) and spec.get("empty") is True:
        if side is None:
            raise SchemaError(f"{where}: 'empty' not allowed here", field="chi")
        a, b = ("d1", "d2") if side == "dual" else ("s1", "s2")
        p1, p2 = packages[a], packages[b]
        if p1.dim + p2.dim >= p1.n:
            raise SchemaError(
                f"{where}: 'empty' needs dim1 + dim2 < n", field="chi"
            )
        return 0
    raise SchemaError(f"{where}: cannot resolve chi spec {spec!r}", field="chi")


# ---------------------------------------------------------------------------
# curve-pair assembly
# ---------------------------------------------------------------------------

def transversal_slice_line(curve: PlaneCurve) -> MultiPoly:
    """First line of the deterministic schedule transversal to the curve."""
    ring = curve.variables
    gens = [MultiPoly.var(ring, v) for v in ring]
    for coeffs in _LINE_SCHEDULE:
        line = gens[0] * coeffs[0] + gens[1] * coeffs[1] + gens[2] * coeffs[2]
        if curvelab.line_transversality(curve, line):
            return line
    raise NotTransversal(f"no schedule line is transversal to {curve.F.text()}")


def curve_package(curve: PlaneCurve, label: str) -> VarietyInvariants:
    """Invariant package of a plane curve, every entry computed and certified.

    chi_slices[1] = degree is certified by exhibiting a transversal line.
    """
    report = curvelab.curve_report(curve)
    transversal_slice_line(curve)  # raises if no certificate exists
    return VarietyInvariants(
        label=label,
        n=2,
        dim=1,
        degree=report.d,
        c0m=report.c0m,
        chi_slices=(0, report.d, report.chi),
        transversality_certified=True,
    )


def _line_dual_point(curve: PlaneCurve) -> tuple:
    """The dual-plane point of a line (its coefficient vector)."""
    coeffs = [Fraction(0), Fraction(0), Fraction(0)]
    for e, c in curve.F.terms.items():
        coeffs[e.index(1)] = c
    return elimination.normalize_point(coeffs)


@dataclass(frozen=True)
class CurvePairData:
    s1: VarietyInvariants
    s2: VarietyInvariants
    d1: VarietyInvariants
    d2: VarietyInvariants
    chi_cap: int
    chi_cap_dual: int


def build_curve_pair(c1: PlaneCurve, c2: PlaneCurve,
                     label1: str = "S1", label2: str = "S2") -> CurvePairData:
    """Assemble all identity inputs for a pair of plane curves.

    Lines dualize to points; higher-degree curves get explicit dual
    equations and full dual-curve reports.  Both intersection chis are
    certified counts; any failed certificate raises.
    """
    s1 = curve_package(c1, label1)
    s2 = curve_package(c2, label2)
    chi_cap = curvelab.transversal_intersection_chi(c1, c2)

    duals = []
    for curve, label in ((c1, label1), (c2, label2)):
        if curve.degree == 1:
            point = _line_dual_point(curve)
            duals.append((
                "point", point,
                charclass.linear_space_package(2, 0, f"{label} dual point"),
            ))
        else:
            eq = dualgeom.dual_equation(curve)
            dual_curve = PlaneCurve(eq.D)
            duals.append(
                ("curve", dual_curve, curve_package(dual_curve, f"{label} dual curve"))
            )

    (k1, o1, d1), (k2, o2, d2) = duals
    if k1 == "point" and k2 == "point":
        if o1 == o2:
            raise NotTransversal("the two lines coincide")
        chi_dual = 0
    elif k1 == "point" or k2 == "point":
        point = o1 if k1 == "point" else o2
        dual_curve = o2 if k1 == "point" else o1
        vals = dict(zip(dual_curve.variables, point))
        if dual_curve.F.evaluate(vals) == 0:
            raise NotTransversal("dual point lies on the dual curve")
        chi_dual = 0
    else:
        chi_dual = curvelab.transversal_intersection_chi(o1, o2)
    return CurvePairData(s1, s2, d1, d2, chi_cap, chi_dual)


# ---------------------------------------------------------------------------
# running cases
# ---------------------------------------------------------------------------

def _both_forms(data: CurvePairData | dict) -> dict:
    if isinstance(data, CurvePairData):
        args = (data.s1, data.s2, data.d1, data.d2, data.chi_cap, data.chi_cap_dual)
    else:
        args = (data["s1"], data["s2"], data["d1"], data["d2"],
                data["chi_cap"], data["chi_cap_dual"])
    out = {}
    for form in (CONORMAL, INTRO):
        rep = flopcalc.check_identity(*args, form=form)
        out[form] = rep
    return out


def run_case(case: CorpusCase, root: Path) -> CaseResult:
    start = time.perf_counter()
    try:
        details = _dispatch(case, root)
        ok = details.pop("_ok")
        status = "pass" if ok else "fail"
    except DualisError as exc:
        details = {"error": f"{type(exc).__name__}: {exc}"}
        status = "error"
    wall = (time.perf_counter() - start) * 1000.0
    return CaseResult(case.case_id, status, details, wall)


def _dispatch(case: CorpusCase, root: Path) -> dict:
    where = f"case {case.case_id}"
    inputs = case.inputs
    expected = case.expected
    if case.kind == "CurvePair":
        c1 = resolve_curve(inputs["curve1"], root, where)
        c2 = resolve_curve(inputs["curve2"], root, where)
        data = build_curve_pair(c1, c2, inputs.get("label1", "S1"),
                                inputs.get("label2", "S2"))
        reports = _both_forms(data)
        details = {
            "chi_cap": data.chi_cap,
            "chi_cap_dual": data.chi_cap_dual,
            "checks": {form: rep.as_dict() for form, rep in reports.items()},
        }
        holds = all(rep.holds for rep in reports.values())
        ok = holds == expected.get("holds", True)
        if "lhs" in expected:
            want = parse_rational(expected["lhs"])
            got = reports[expected.get("lhs_form", CONORMAL)].lhs
            ok = ok and got == want
        details["_ok"] = ok
        return details
    if case.kind == "PackagePair":
        pkgs = {
            name: resolve_package(inputs[name], root, where)
            for name in ("s1", "s2", "d1", "d2")
        }
        chi_cap = resolve_chi(inputs["chi_cap"], pkgs, where, side="primal")
        chi_dual = resolve_chi(inputs["chi_cap_dual"], pkgs, where, side="dual")
        reports = _both_forms({**pkgs, "chi_cap": chi_cap, "chi_cap_dual": chi_dual})
        holds = all(rep.holds for rep in reports.values())
        ok = holds == expected.get("holds", True)
        return {
            "chi_cap": chi_cap,
            "chi_cap_dual": chi_dual,
            "checks": {form: rep.as_dict() for form, rep in reports.items()},
            "_ok": ok,
        }
    if case.kind == "ClassicalPlucker":
        got = flopcalc.classical_plucker(
            inputs["d"], inputs["delta"], inputs["kappa"]
        )
        details = {
            "d_dual": got.d_dual,
            "delta_dual": got.delta_dual,
            "kappa_dual": got.kappa_dual,
            "g": got.g,
        }
        ok = (
            got.d_dual == expected["d_dual"]
            and got.delta_dual == expected["delta_dual"]
            and got.kappa_dual == expected["kappa_dual"]
        )
        if "oracle_curve" in inputs:
            curve = resolve_curve(inputs["oracle_curve"], root, where)
            report = curvelab.curve_report(curve)
            oracle = dualgeom.dual_degree_oracle(curve)
            details["oracle_d_dual"] = oracle
            ok = ok and oracle == got.d_dual and (
                report.d, report.delta, report.kappa
            ) == (inputs["d"], inputs["delta"], inputs["kappa"])
        details["_ok"] = ok
        return details
    if case.kind == "QuadricPair":
        s = resolve_package(inputs["s"], root, where)
        s_dual = resolve_package(inputs["s_dual"], root, where)
        pkgs = {"s": s, "s_dual": s_dual}
        chi_q = resolve_chi(inputs["chi_s_q"], pkgs, where, side=None)
        chi_qd = resolve_chi(inputs["chi_sd_qd"], pkgs, where, side=None)
        rep = flopcalc.quadric_pair_check(s, s_dual, chi_q, chi_qd)
        ok = rep.holds == expected.get("holds", True)
        return {"check": rep.as_dict(), "_ok": ok}
    if case.kind == "SolveUnknown":
        values = inputs["values"]
        instance = IdentityInstance(
            n=inputs["n"],
            dims=tuple(inputs["dims"]),
            form=inputs.get("form", INTRO),
            **{k: (None if v is None else v) for k, v in values.items()},
        )
        got = flopcalc.solve_unknown(instance)
        want = parse_rational(expected["value"])
        return {"value": format_rational(got), "_ok": got == want}
    raise SchemaError(f"{where}: unknown kind", field="kind")


def run_corpus(path, include_timing: bool = True) -> RunReport:
    path = Path(path)
    root = path if path.is_dir() else path.parent
    cases = load_corpus(path)
    results = [run_case(case, root) for case in cases]
    return RunReport(results, include_timing=include_timing)
