"""Projective dual curves from first principles.

The dual of a plane curve C = V(F) is the closure of its tangent lines in
the dual plane.  It is computed by elimination: a line with coordinates
(u, v, w), w != 0, meets the curve where the binary form

    phi(x, y) = F(x*w, y*w, -(u*x + v*y))

vanishes, so the lines meeting C with a repeated contact are cut out by the
discriminant of phi in x.  The discriminant also picks up extraneous
components with known provenance, which are stripped in a fixed order:

    1. all powers of w (lines through the chart's center of projection),
    2. for every singular point s of C, all powers of the dual line
       s0*u + s1*v + s2*w (every line through a singular point meets C
       doubly there),
    3. the square-free part of what remains.

If the chart is degenerate for the given curve (e.g. the curve passes
through a coordinate point in a way that kills the leading coefficient), a
deterministic schedule of rational coordinate changes is applied until the
chart is valid; the result is mapped back through the transposed matrix, so
the reported equation always lives in the original dual coordinates.

The module also provides an independent degree count through polar curves
(no discriminants involved), a biduality check, and dual-curve reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import curvelab, elimination
from .curvelab import DUAL_VARS, PRIMAL_VARS, PlaneCurve
from .errors import (
    ChartExhausted,
    GuardrailExceeded,
    InvalidParams,
    NonGenericWitness,
    WitnessOnCurve,
)
from .exact import MultiPoly, UniPolyView, discriminant, radical, try_exact_div

#: deterministic witness points for polar constructions
WITNESS_SEQUENCE = (
    (1, 2, 5), (3, 7, 2), (2, 5, 11), (7, 3, 13),
    (5, 1, 3), (1, 1, 7), (11, 2, 3), (2, 9, 5),
)

#: schedule of rational coordinate changes for degenerate charts
_CHART_SCHEDULE = (
    ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
    ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
    ((1, 0, 0), (0, 0, 1), (0, 1, 0)),
    ((1, 0, 0), (0, 1, 0), (1, 0, 1)),
    ((1, 0, 0), (0, 1, 0), (0, 1, 1)),
    ((1, 1, 0), (0, 1, 0), (0, 0, 1)),
    ((1, 0, 0), (1, 1, 0), (0, 0, 1)),
    ((1, 0, 0), (0, 1, 0), (1, 1, 1)),
    ((1, 0, 1), (0, 1, 0), (0, 0, 1)),
    ((1, 0, 0), (0, 1, 1), (1, 0, 1)),
)


def dual_ring(variables) -> tuple:
    if tuple(variables) == PRIMAL_VARS:
        return DUAL_VARS
    if tuple(variables) == DUAL_VARS:
        return PRIMAL_VARS
    raise InvalidParams(f"no dual coordinates fixed for ring {variables}")


@dataclass(frozen=True)
class DualCurve:
    D: MultiPoly
    d_dual: int
    removed_factors: tuple  # ((MultiPoly, int), ...)


def _adjugate(m) -> tuple:
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def _strip_all(poly: MultiPoly, factor: MultiPoly):
    k = 0
    while True:
        q = try_exact_div(poly, factor)
        if q is None:
            return poly, k
        poly = q
        k += 1


def _dual_in_chart(curve: PlaneCurve, sing_points) -> tuple | None:
    """Dual equation in the w-chart, or None when the chart is degenerate."""
    src = curve.variables
    dst = dual_ring(src)
    params = src[:2]
    ring5 = params + dst
    p0 = MultiPoly.var(ring5, params[0])
    p1 = MultiPoly.var(ring5, params[1])
    u0 = MultiPoly.var(ring5, dst[0])
    u1 = MultiPoly.var(ring5, dst[1])
    u2 = MultiPoly.var(ring5, dst[2])
    phi = curve.F.substitute({
        src[0]: p0 * u2,
        src[1]: p1 * u2,
        src[2]: -(u0 * p0 + u1 * p1),
    })
    if phi.degree_in(params[0]) != curve.degree:
        return None  # leading coefficient vanished: first variable divides F
    psi = phi.substitute({
        params[0]: p0,
        params[1]: MultiPoly.const(ring5, 1),
        dst[0]: u0, dst[1]: u1, dst[2]: u2,
    })
    if psi.degree_in(params[0]) != curve.degree:
        return None
    disc = discriminant(UniPolyView(psi, params[0]))
    if disc.is_zero():
        return None
    disc = disc.restrict_variables(dst)

    removed = []
    w = MultiPoly.var(dst, dst[2])
    disc, k = _strip_all(disc, w)
    if k:
        removed.append((w, k))
    for s in sing_points:
        line = (
            MultiPoly.var(dst, dst[0]) * s[0]
            + MultiPoly.var(dst, dst[1]) * s[1]
            + MultiPoly.var(dst, dst[2]) * s[2]
        )
        disc, k = _strip_all(disc, line)
        if k:
            removed.append((line, k))
    if disc.is_constant():
        return None
    rad = radical(disc)
    if rad.total_degree() != disc.total_degree():
        cofactor = try_exact_div(disc, rad)
        removed.append((cofactor.primitive(), 1))
    return rad.primitive(), removed


def dual_equation(curve: PlaneCurve) -> DualCurve:
    """Equation of the projective dual curve, by discriminant elimination.

    Requires degree >= 2 (the dual of a line is a point, not a curve) and
    rational singular points; the curve is assumed irreducible, which this
    package does not verify (factorization is out of scope).
    """
    if curve.degree < 2:
        raise InvalidParams("dual_equation needs a curve of degree >= 2")
    src = curve.variables
    dst = dual_ring(src)
    sing = [s.point for s in curvelab.singular_points(curve)]
    for matrix in _CHART_SCHEDULE:
        moved = PlaneCurve(elimination.apply_matrix(curve.F, matrix))
        adj = _adjugate(matrix)
        moved_sing = [
            elimination.normalize_point([
                Fraction(sum(adj[i][j] * p[j] for j in range(3))) for i in range(3)
            ])
            for p in sing
        ]
        got = _dual_in_chart(moved, moved_sing)
        if got is None:
            continue
        d_moved, removed_moved = got
        back = elimination.mat_transpose(matrix)
        D = elimination.apply_matrix(d_moved, back).primitive()
        removed = tuple(
            (elimination.apply_matrix(f, back).primitive(), k)
            for f, k in removed_moved
        )
        if D.is_constant() or not D.is_homogeneous():
            continue
        return DualCurve(D=D, d_dual=D.total_degree(), removed_factors=removed)
    raise ChartExhausted("no coordinate change in the schedule validates the chart")


def _polar(curve: PlaneCurve, witness) -> MultiPoly:
    gx, gy, gz = curve.gradient()
    return gx * witness[0] + gy * witness[1] + gz * witness[2]


def _oracle_single(curve: PlaneCurve, witness, singular_count: int) -> int:
    vals = dict(zip(curve.variables, witness))
    if curve.F.evaluate(vals) == 0:
        raise WitnessOnCurve(f"witness {witness} lies on the curve")
    polar = _polar(curve, witness)
    distinct = elimination.distinct_intersection_count(curve.F, polar)
    return distinct - singular_count


def dual_degree_oracle(curve: PlaneCurve, witness=None) -> int:
    """Degree of the dual curve, counted through a polar intersection.

    The polar of a generic point meets the curve in the tangency points of
    the tangent lines through that point, plus every singular point; the
    certified distinct count minus the certified singular count is the dual
    degree.  The count is recomputed with a second deterministic witness and
    a mismatch raises NonGenericWitness.
    """
    if curve.degree < 2:
        raise InvalidParams("dual degree oracle needs a curve of degree >= 2")
    singular_count = curvelab.certified_singular_count(curve)

    def usable(w):
        vals = dict(zip(curve.variables, w))
        return curve.F.evaluate(vals) != 0 and not _polar(curve, w).is_zero()

    if witness is None:
        witness = next(w for w in WITNESS_SEQUENCE if usable(w))
    count = _oracle_single(curve, witness, singular_count)
    second = next(w for w in WITNESS_SEQUENCE if tuple(w) != tuple(witness) and usable(w))
    check = _oracle_single(curve, second, singular_count)
    if count != check:
        raise NonGenericWitness(
            f"witnesses {witness} and {second} disagree: {count} vs {check}"
        )
    return count


def biduality_check(curve: PlaneCurve) -> bool:
    """Does dualizing twice return the original curve?

    For dual degree <= 3 the bidual equation is computed outright and tested
    for proportionality with F.  A higher-degree dual exceeds the bidual
    guardrail, so the check falls back to the polar oracle: the dual of the
    dual curve must have the original degree.
    """
    if curve.degree > 3:
        raise GuardrailExceeded("biduality guardrail: source degree must be <= 3")
    first = dual_equation(curve)
    dual_curve = PlaneCurve(first.D)
    if first.d_dual <= 3:
        second = dual_equation(dual_curve)
        return second.D.primitive() == curve.F.primitive()
    return dual_degree_oracle(dual_curve) == curve.degree


def dual_curve_report(curve: PlaneCurve) -> curvelab.CurveReport:
    """Full curve report of the dual curve.

    Guardrail: refused when the dual has degree > 3 (its singular analysis
    exceeds desk scale; package-level formulas cover those cases).
    """
    first = dual_equation(curve)
    if first.d_dual > 3:
        raise GuardrailExceeded(
            f"dual degree {first.d_dual} exceeds the report guardrail"
        )
    return curvelab.curve_report(PlaneCurve(first.D))
