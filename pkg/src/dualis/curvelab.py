"""Analysis of plane projective curves over the rationals.

Given a square-free homogeneous form F in three variables, this module finds
the singular locus, classifies rational singular points into nodes, cusps and
"other", and assembles the numerical invariants used by the intersection
identities: geometric genus, topological Euler characteristic and the
degree-zero Chern-Mather class

    c0m(C) = chi(C, Eu) = chi(C) + sum over singular points of (Eu(p) - 1),

where the local Euler obstruction of a plane-curve singularity equals its
multiplicity (2 at nodes and cusps).  Closed forms for genus and chi are only
available in the node/cusp regime:

    g   = (d-1)(d-2)/2 - delta - kappa
    chi = 2 - 2g - delta          (a node glues two branch points into one)
    c0m = chi + delta + kappa = -d^2 + 3d + 2*delta + 3*kappa

Everything is certified: ``singular_points`` counts the geometric singular
scheme by elimination and refuses to answer when the rational points it found
do not exhaust that count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import elimination
from .errors import (
    InvalidParams,
    IrrationalSingularity,
    NotSingular,
    ReducibleCurve,
    UnsupportedSingularity,
    ZeroInput,
)
from .exact import MultiPoly, is_squarefree, parse_poly, poly_gcd_many

PRIMAL_VARS = ("x", "y", "z")
DUAL_VARS = ("u", "v", "w")

NODE = "Node"
CUSP = "Cusp"
OTHER = "Other"


class PlaneCurve:
    """A reduced plane projective curve V(F), F square-free homogeneous."""

    __slots__ = ("F", "degree")

    def __init__(self, F: MultiPoly):
        if F.is_zero():
            raise ZeroInput("the zero form defines no curve")
        if len(F.variables) != 3:
            raise InvalidParams("plane curves need exactly three variables")
        if not F.is_homogeneous():
            raise InvalidParams(f"{F.text()} is not homogeneous")
        if F.total_degree() < 1:
            raise InvalidParams("constant form defines no curve")
        if not is_squarefree(F):
            raise ReducibleCurve(f"{F.text()} has a repeated factor")
        object.__setattr__(self, "F", F)
        object.__setattr__(self, "degree", F.total_degree())

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("PlaneCurve is immutable")

    @classmethod
    def from_text(cls, text: str, variables=PRIMAL_VARS) -> "PlaneCurve":
        return cls(parse_poly(text, variables))

    @property
    def variables(self):
        return self.F.variables

    def gradient(self):
        return [self.F.derivative(v) for v in self.variables]

    def contains(self, point) -> bool:
        vals = dict(zip(self.variables, point))
        return self.F.evaluate(vals) == 0

    def __repr__(self):
        return f"PlaneCurve({self.F.text()!r})"


@dataclass(frozen=True)
class SingularPoint:
    point: tuple          # coprime integers, first nonzero positive
    kind: str             # Node | Cusp | Other
    multiplicity: int
    euler_obstruction: int

    def __post_init__(self):
        if self.kind in (NODE, CUSP):
            assert self.multiplicity == 2 and self.euler_obstruction == 2


@dataclass(frozen=True)
class CurveReport:
    d: int
    delta: int            # nodes
    kappa: int            # cusps
    other_singularities: tuple
    g: int
    chi: int
    c0m: int

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "delta": self.delta,
            "kappa": self.kappa,
            "g": self.g,
            "chi": self.chi,
            "c0m": self.c0m,
        }


def _lowest_parts(F: MultiPoly, point, chart: int):
    """Homogeneous pieces of the local expansion at `point` in chart `chart`.

    Returns a dict degree -> binary form in the two affine directions
    (expressed in the curve's own ring with the chart variable unused).
    """
    ring = F.variables
    scale = Fraction(1, point[chart])
    affine = [Fraction(c) * scale for c in point]
    gens = {v: MultiPoly.var(ring, v) for v in ring}
    sub = {}
    for i, v in enumerate(ring):
        if i == chart:
            sub[v] = MultiPoly.const(ring, 1)
        else:
            sub[v] = gens[v] + affine[i]
    local = F.substitute(sub)
    buckets: dict = {}
    for e, c in local.terms.items():
        d = sum(e)
        buckets.setdefault(d, {})[e] = c
    return {d: MultiPoly(ring, terms) for d, terms in buckets.items()}


def classify_singularity(curve: PlaneCurve, point) -> SingularPoint:
    """Classify one rational singular point.

    The point is moved to the origin of an affine chart; with q the quadratic
    and c the cubic part of the local expansion the rules are: q of rank 2 is
    a node; q = l^2 of rank 1 with l not dividing c is a cusp; everything
    else is Other with multiplicity the order of vanishing.  The Euler
    obstruction of a plane-curve singularity is its multiplicity.
    """
    point = elimination.normalize_point([Fraction(c) for c in point])
    vals = dict(zip(curve.variables, point))
    if any(g.evaluate(vals) != 0 for g in curve.gradient()):
        raise NotSingular(f"gradient does not vanish at {point}")
    chart = next(i for i, c in enumerate(point) if c != 0)
    parts = _lowest_parts(curve.F, point, chart)
    m = min(d for d in parts if d >= 0 and not parts[d].is_zero())
    assert m >= 2, "a singular point has multiplicity at least 2"
    if m > 2:
        return SingularPoint(point, OTHER, m, m)

    q = parts[2]
    ab = [v for i, v in enumerate(curve.variables) if i != chart]
    A = q.terms.get(_exps(curve.variables, {ab[0]: 2}), Fraction(0))
    B = q.terms.get(_exps(curve.variables, {ab[0]: 1, ab[1]: 1}), Fraction(0))
    C = q.terms.get(_exps(curve.variables, {ab[1]: 2}), Fraction(0))
    disc = B * B - 4 * A * C
    if disc != 0:
        return SingularPoint(point, NODE, 2, 2)
    # rank one: q is a rational multiple of a square of a rational line l
    if A != 0:
        l_root = (B, -2 * A)  # zero of 2A*a + B*b
    else:
        l_root = (1, 0)       # q = C*b^2, l = b
    c = parts.get(3, MultiPoly.zero(curve.variables))
    lvals = {v: Fraction(0) for v in curve.variables}
    lvals[ab[0]], lvals[ab[1]] = Fraction(l_root[0]), Fraction(l_root[1])
    if not c.is_zero() and c.evaluate(lvals) != 0:
        return SingularPoint(point, CUSP, 2, 2)
    return SingularPoint(point, OTHER, 2, 2)


def _exps(ring, assign: dict) -> tuple:
    return tuple(assign.get(v, 0) for v in ring)


def singular_points(curve: PlaneCurve) -> list:
    """All rational singular points, classified, with a certified total.

    The geometric number of singular points is counted by elimination
    (cross-checked in independent frames); if it exceeds the number of
    rational points found the curve has irrational singularities and the
    operation refuses rather than under-report.
    """
    grads = curve.gradient()
    if not poly_gcd_many(grads).is_constant():
        raise ReducibleCurve("partial derivatives share a component")
    points = elimination.rational_system_points(grads)
    certified = elimination.certified_singular_count(grads)
    if certified > len(points):
        raise IrrationalSingularity(
            f"found {len(points)} rational singular points but the certified "
            f"count is {certified}"
        )
    if certified < len(points):  # pragma: no cover - would be an internal bug
        raise ReducibleCurve("inconsistent singular counts")
    return [classify_singularity(curve, p) for p in points]


def certified_singular_count(curve: PlaneCurve) -> int:
    """Geometric number of singular points (rational or not)."""
    grads = curve.gradient()
    if not poly_gcd_many(grads).is_constant():
        raise ReducibleCurve("partial derivatives share a component")
    return elimination.certified_singular_count(grads)


def curve_report(curve: PlaneCurve) -> CurveReport:
    """Invariants of a curve with at most nodes and cusps.

    chi uses the normalization rule (a node lowers chi by one, a cusp does
    not); the closed form for c0m is asserted against the weighted-Euler
    definition before returning.
    """
    sings = singular_points(curve)
    others = tuple(s for s in sings if s.kind == OTHER)
    if others:
        raise UnsupportedSingularity(
            f"closed forms are refused: {len(others)} singularities beyond node/cusp"
        )
    d = curve.degree
    delta = sum(1 for s in sings if s.kind == NODE)
    kappa = sum(1 for s in sings if s.kind == CUSP)
    g = (d - 1) * (d - 2) // 2 - delta - kappa
    if g < 0:
        raise InvalidParams(f"impossible singularity counts: genus {g} < 0")
    chi = 2 - 2 * g - delta
    c0m = chi + sum(s.euler_obstruction - 1 for s in sings)
    assert c0m == -d * d + 3 * d + 2 * delta + 3 * kappa
    return CurveReport(d, delta, kappa, others, g, chi, c0m)


def _line_basis(line: MultiPoly):
    """Two independent rational points spanning the line V(a*x + b*y + c*z)."""
    ring = line.variables
    coeffs = [line.terms.get(_exps(ring, {v: 1}), Fraction(0)) for v in ring]
    a, b, c = coeffs
    if c != 0:
        return (c, 0, -a), (0, c, -b)
    if b != 0:
        return (b, -a, 0), (0, 0, 1)
    return (0, 1, 0), (0, 0, 1)


def line_transversality(curve: PlaneCurve, line: MultiPoly) -> bool:
    """Does the line miss every singular point and meet C in d distinct points?

    Equivalent to the restriction of F to the line being a square-free binary
    form of full degree d.
    """
    if line.is_zero():
        raise ZeroInput("the zero form is not a line")
    if line.total_degree() != 1 or not line.is_homogeneous():
        raise InvalidParams("line must be a nonzero degree-1 form")
    line = line.restrict_variables(curve.variables)
    for s in singular_points(curve):
        vals = dict(zip(curve.variables, s.point))
        if line.evaluate(vals) == 0:
            return False
    p, q = _line_basis(line)
    ring = curve.variables
    s_var, t_var = ring[0], ring[1]  # reuse two ring symbols as parameters
    s_gen = MultiPoly.var(ring, s_var)
    t_gen = MultiPoly.var(ring, t_var)
    sub = {
        v: s_gen * Fraction(p[i]) + t_gen * Fraction(q[i])
        for i, v in enumerate(ring)
    }
    restriction = curve.F.substitute(sub)
    if restriction.is_zero():
        return False  # the line lies on the curve
    return (
        elimination.binary_distinct_roots(restriction, s_var, t_var)
        == curve.degree
    )


def transversal_intersection_chi(c1: PlaneCurve, c2: PlaneCurve) -> int:
    """chi of the intersection of two transversally-intersecting curves.

    A transversal intersection of curves of degrees d1, d2 is d1*d2 reduced
    points, so chi equals the certified point count.  Raises NotTransversal
    when the pair cannot be certified.
    """
    if c1.variables != c2.variables:
        raise InvalidParams("curves live in different coordinate rings")
    return elimination.transversal_intersection_count(c1.F, c2.F)
