"""Point counting and rational-point enumeration for plane systems.

Everything here reduces to resultants of homogeneous trivariate polynomials.
Counts must be exact, so each routine runs over a deterministic schedule of
projective coordinate frames (a base change moving the line at infinity,
composed with x-shears) and only reports a number it can certify:

* pairs of curves: in a frame where no solutions sit at infinity and the
  leading y-coefficients are constants, the resultant factors over the
  intersection points with multiplicities.  Its square-free degree counts
  distinct x-images, which can only undercount (two points sharing an
  x-coordinate).  Each point pair spoils at most one shear, so taking the
  maximum over C(N,2)+1 valid shears certifies the count; hitting the Bezout
  ceiling d1*d2 certifies immediately.

* transversality: all intersection multiplicities equal one exactly when the
  (degree d1*d2) resultant is square-free in some valid frame.

* singular loci: common zeros of the three partial derivatives.  Pairwise
  resultants are combined by a gcd, rational roots are verified fiber by
  fiber, and the total from two independent frames must agree.

Nothing here ever returns a float or an approximation; when a count cannot
be certified the routine raises.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ChartExhausted, NotTransversal, ReducibleCurve, ZeroInput
from .exact import (
    MultiPoly,
    UniPolyView,
    poly_gcd,
    poly_gcd_many,
    resultant,
    squarefree_part,
)

Matrix = tuple  # 3x3 integer matrix, rows are tuples


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def mat_transpose(a: Matrix) -> Matrix:
    return tuple(tuple(a[j][i] for j in range(3)) for i in range(3))


def apply_matrix(poly: MultiPoly, m: Matrix) -> MultiPoly:
    """Coordinate change: returns G with G(v) = F(M v)."""
    vs = poly.variables
    gens = [MultiPoly.var(vs, v) for v in vs]
    images = {}
    for i, v in enumerate(vs):
        img = MultiPoly.zero(vs)
        for j in range(3):
            if m[i][j]:
                img = img + gens[j] * m[i][j]
        images[v] = img
    return poly.substitute(images)


_IDENT: Matrix = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _shear(t: int) -> Matrix:
    return ((1, t, 0), (0, 1, 0), (0, 0, 1))


def _base_frames() -> list:
    """Deterministic bases: permutations composed with infinity-line shifts."""
    swaps = [
        _IDENT,
        ((0, 1, 0), (1, 0, 0), (0, 0, 1)),
        ((0, 0, 1), (0, 1, 0), (1, 0, 0)),
    ]
    shifts = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (3, 1), (1, 3),
              (2, 3), (3, 2), (4, 1), (1, 4), (5, 2)]
    bases = []
    for k, m in shifts:
        shift = ((1, 0, 0), (0, 1, 0), (-k, -m, 1))
        for s in swaps:
            bases.append(mat_mul(shift, s))
    return bases


_BASES = _base_frames()


# ---------------------------------------------------------------------------
# small univariate helpers
# ---------------------------------------------------------------------------

def univar_coeffs(p: MultiPoly, var: str) -> list:
    """Fraction coefficient list [c0..cd] of a polynomial using only `var`."""
    idx = p.variables.index(var)
    d = p.degree_in(var)
    coeffs = [Fraction(0)] * (max(d, 0) + 1)
    for e, c in p.terms.items():
        if any(k > 0 for i, k in enumerate(e) if i != idx):
            raise ValueError(f"{p.text()} is not univariate in {var}")
        coeffs[e[idx]] += c
    return coeffs


def _divisors_from_factors(factors: dict) -> list:
    divs = [1]
    for prime, mult in factors.items():
        divs = [d * prime**k for d in divs for k in range(mult + 1)]
        if len(divs) > 20000:
            break
    return divs


def _factorize(n: int) -> dict:
    factors: dict = {}
    n = abs(n)
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 7
    while f * f <= n and f < 100000:
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        f += 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def rational_roots(coeffs: Sequence[Fraction]) -> tuple:
    """All rational roots of a univariate polynomial, plus unresolved degree.

    Returns ``(roots, leftover)`` where roots is the sorted list of distinct
    rational roots and ``leftover`` is the degree of the cofactor after all
    rational linear factors are removed (its roots are irrational/complex).
    """
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ZeroInput("roots of the zero polynomial")
    den = 1
    for c in cs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]
    g = 0
    for a in ints:
        g = math.gcd(g, a)
    ints = [a // g for a in ints]

    roots = []
    k = 0
    while ints[k] == 0:
        k += 1
    if k > 0:
        roots.append(Fraction(0))
    poly = ints[k:]
    if len(poly) == 1:
        return roots, 0

    cand_num = _divisors_from_factors(_factorize(poly[0]))
    cand_den = _divisors_from_factors(_factorize(poly[-1]))
    candidates = set()
    for n in cand_num:
        for d in cand_den:
            q = Fraction(n, d)
            candidates.add(q)
            candidates.add(-q)

    def horner(p, r):
        acc = Fraction(0)
        for c in reversed(p):
            acc = acc * r + c
        return acc

    work = [Fraction(c) for c in poly]
    for r in sorted(candidates):
        while len(work) > 1 and horner(work, r) == 0:
            if r not in roots:
                roots.append(r)
            # deflate by (x - r)
            out = []
            acc = Fraction(0)
            for c in reversed(work):
                acc = acc * r + c
                out.append(acc)
            out.reverse()
            assert out[0] == 0
            work = out[1:]
    leftover = len(work) - 1
    return sorted(roots), leftover


def _sqfree_degree(coeffs: Sequence[Fraction]) -> int:
    """Number of distinct complex roots of a univariate polynomial."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ZeroInput("zero polynomial")
    if len(cs) == 1:
        return 0
    der = [c * (i + 1) for i, c in enumerate(cs[1:])]
    g = _uni_gcd(cs, der)
    return (len(cs) - 1) - (len(g) - 1)


def _uni_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list:
    a = list(a)
    b = list(b)
    while b and any(c != 0 for c in b):
        a, b = b, _uni_rem(a, b)
    while a and a[-1] == 0:
        a.pop()
    return a if a else [Fraction(0)]


def _uni_rem(a, b):
    a = list(a)
    while b and b[-1] == 0:
        b = b[:-1]
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and any(c != 0 for c in a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        q = a[-1] / lb
        shift = len(a) - 1 - db
        for i in range(db + 1):
            a[shift + i] -= q * b[i]
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


# ---------------------------------------------------------------------------
# binary forms (restrictions to a projective line)
# ---------------------------------------------------------------------------

def binary_distinct_roots(form: MultiPoly, u: str, v: str) -> int:
    """Distinct projective roots [u:v] of a nonzero binary form."""
    if form.is_zero():
        raise ZeroInput("zero binary form")
    iu = form.variables.index(u)
    iv = form.variables.index(v)
    mu = min(e[iu] for e in form.terms)
    mv = min(e[iv] for e in form.terms)
    count = (1 if mu else 0) + (1 if mv else 0)
    core = {tuple(
        k - (mu if i == iu else 0) - (mv if i == iv else 0) if i in (iu, iv) else k
        for i, k in enumerate(e)
    ): c for e, c in form.terms.items()}
    corep = MultiPoly(form.variables, core)
    sub = {w: (MultiPoly.var(form.variables, w) if w == u else
               MultiPoly.const(form.variables, 1) if w == v else
               MultiPoly.var(form.variables, w))
           for w in form.variables}
    dehom = corep.substitute(sub)
    cs = univar_coeffs(dehom, u)
    if len(cs) > 1:
        count += _sqfree_degree(cs)
    return count


def binary_rational_roots(form: MultiPoly, u: str, v: str) -> list:
    """Rational projective roots [u0:v0] of a binary form, as integer pairs."""
    if form.is_zero():
        raise ZeroInput("zero binary form")
    iu = form.variables.index(u)
    iv = form.variables.index(v)
    mu = min(e[iu] for e in form.terms)
    mv = min(e[iv] for e in form.terms)
    out = []
    if mu:
        out.append((0, 1))
    if mv:
        out.append((1, 0))
    sub = {w: (MultiPoly.var(form.variables, w) if w == u else
               MultiPoly.const(form.variables, 1) if w == v else
               MultiPoly.var(form.variables, w))
           for w in form.variables}
    dehom = form.substitute(sub)
    cs = univar_coeffs(dehom, u)
    if len(cs) > 1:
        roots, _ = rational_roots(cs)
        for r in roots:
            if r != 0:
                out.append((r.numerator, r.denominator))
    return out


def normalize_point(coords: Sequence[Fraction]) -> tuple:
    """Coprime integer coordinates, first nonzero entry positive."""
    fracs = [Fraction(c) for c in coords]
    if all(c == 0 for c in fracs):
        raise ValueError("zero vector is not a projective point")
    den = 1
    for c in fracs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in fracs]
    g = 0
    for a in ints:
        g = math.gcd(g, a)
    ints = [a // g for a in ints]
    for a in ints:
        if a != 0:
            if a < 0:
                ints = [-b for b in ints]
            break
    return tuple(ints)


# ---------------------------------------------------------------------------
# affine system solving (for singular loci)
# ---------------------------------------------------------------------------

class _FrameDegenerate(Exception):
    """Internal: this frame cannot be used; try the next one."""


def _affine_system(polys: list, avar: str, bvar: str) -> tuple:
    """Distinct-solution data for a system of polynomials in (avar, bvar).

    Returns ``(rational_points, certified_count)`` where rational_points is a
    list of (Fraction, Fraction) pairs and certified_count includes solutions
    with irrational coordinates (each unresolved x-value counted once; the
    caller cross-checks via a second frame).
    """
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        raise ReducibleCurve("system vanishes identically")
    if any(p.is_constant() for p in nonzero):
        return [], 0
    shared = poly_gcd_many(nonzero)
    if not shared.is_constant():
        raise ReducibleCurve("system polynomials share a component")

    gens = []
    b_pos = [p for p in nonzero if p.degree_in(bvar) > 0]
    for p in nonzero:
        if p.degree_in(bvar) == 0:
            gens.append(p)
    for i in range(len(b_pos)):
        for j in range(i + 1, len(b_pos)):
            r = resultant(UniPolyView(b_pos[i], bvar), UniPolyView(b_pos[j], bvar))
            if not r.is_zero():
                gens.append(r)
    if not gens:
        raise _FrameDegenerate
    s = poly_gcd_many(gens)
    if s.is_constant():
        return [], 0
    s = squarefree_part(s, avar)
    roots, leftover = rational_roots(univar_coeffs(s, avar))

    ring = nonzero[0].variables
    points = []
    fiber_total = 0
    for a0 in roots:
        sub = {w: (MultiPoly.const(ring, a0) if w == avar else MultiPoly.var(ring, w))
               for w in ring}
        fibers = [p.substitute(sub) for p in nonzero]
        fibers = [p for p in fibers if not p.is_zero()]
        assert fibers, "shared line should have been caught by the gcd heuristic"
        if any(p.is_constant() for p in fibers):
            continue  # spurious elimination root
        t = poly_gcd_many(fibers)
        if t.is_constant():
            continue
        t = squarefree_part(t, bvar)
        cs = univar_coeffs(t, bvar)
        fiber_total += _sqfree_degree(cs)
        broots, _ = rational_roots(cs)
        for b0 in broots:
            points.append((a0, b0))
    certified = fiber_total + leftover
    return points, certified


def _chart_substitution(ring, chart_var):
    return {w: (MultiPoly.const(ring, 1) if w == chart_var else MultiPoly.var(ring, w))
            for w in ring}


def _infinity_restriction(polys: list, chart_var: str) -> list:
    ring = polys[0].variables
    sub = {w: (MultiPoly.zero(ring) if w == chart_var else MultiPoly.var(ring, w))
           for w in ring}
    return [p.substitute(sub) for p in polys]


def singular_system_frame_total(polys: list, frame: Matrix) -> int:
    """Distinct common zeros of a homogeneous system in one projective frame."""
    moved = [apply_matrix(p, frame) for p in polys]
    moved = [p for p in moved if not p.is_zero()]
    if not moved:
        raise ReducibleCurve("all system polynomials vanish")
    ring = moved[0].variables
    x, y, z = ring

    inf = [p for p in _infinity_restriction(moved, z) if not p.is_zero()]
    if not inf:
        raise ReducibleCurve("system vanishes on a whole line")
    ginf = poly_gcd_many(inf)
    inf_count = 0 if ginf.is_constant() else binary_distinct_roots(ginf, x, y)

    affine = [p.substitute(_chart_substitution(ring, z)) for p in moved]
    _, aff_count = _affine_system(affine, x, y)
    return aff_count + inf_count


def certified_singular_count(polys: list, max_frames: int = 40) -> int:
    """Distinct common zeros in P^2, certified by agreement of two frames."""
    totals: dict = {}
    tried = 0
    for base in _BASES:
        for t in (0, 1, 2):
            if tried >= max_frames:
                raise ChartExhausted("no two frames agree on the singular count")
            frame = mat_mul(base, _shear(t))
            tried += 1
            try:
                total = singular_system_frame_total(polys, frame)
            except _FrameDegenerate:
                continue
            totals[total] = totals.get(total, 0) + 1
            if totals[total] >= 2:
                return total
    raise ChartExhausted("no two frames agree on the singular count")


def rational_system_points(polys: list) -> list:
    """All rational projective common zeros, from all three affine charts."""
    nz = [p for p in polys if not p.is_zero()]
    if not nz:
        raise ReducibleCurve("all system polynomials vanish")
    ring = nz[0].variables
    found = set()
    for chart in range(3):
        chart_var = ring[chart]
        others = [v for v in ring if v != chart_var]
        affine = [p.substitute(_chart_substitution(ring, chart_var)) for p in nz]
        try:
            pts, _ = _affine_system(affine, others[0], others[1])
        except _FrameDegenerate:
            continue
        for a0, b0 in pts:
            coords = {chart_var: Fraction(1), others[0]: a0, others[1]: b0}
            found.add(normalize_point([coords[v] for v in ring]))
    return sorted(found)


# ---------------------------------------------------------------------------
# counting distinct intersections of two curves
# ---------------------------------------------------------------------------

def _pair_frame_count(F: MultiPoly, G: MultiPoly, base: Matrix, t: int) -> Optional[tuple]:
    """(distinct_x_image_count, resultant_squarefree) in one frame, or None."""
    ring = F.variables
    x, y, z = ring
    Fb = apply_matrix(F, mat_mul(base, _shear(t)))
    Gb = apply_matrix(G, mat_mul(base, _shear(t)))
    one = {x: 0, y: 1, z: 0}
    if Fb.evaluate(one) == 0 or Gb.evaluate(one) == 0:
        return None
    finf, ginf = _infinity_restriction([Fb, Gb], z)
    if finf.is_zero() or ginf.is_zero():
        return None
    if not poly_gcd(finf, ginf).is_constant():
        return None  # common zeros at infinity
    A = Fb.substitute(_chart_substitution(ring, z))
    B = Gb.substitute(_chart_substitution(ring, z))
    R = resultant(UniPolyView(A, y), UniPolyView(B, y))
    d1, d2 = F.total_degree(), G.total_degree()
    if R.is_zero() or R.degree_in(x) != d1 * d2:
        return None
    cs = univar_coeffs(R, x)
    distinct = _sqfree_degree(cs)
    return distinct, distinct == d1 * d2


def _check_pair(F: MultiPoly, G: MultiPoly):
    if F.is_zero() or G.is_zero():
        raise ZeroInput("zero polynomial in curve pair")
    if not poly_gcd(F, G).is_constant():
        raise ReducibleCurve("curves share a component")


def transversal_intersection_count(F: MultiPoly, G: MultiPoly) -> int:
    """Number of intersection points of two transversal plane curves.

    Certified: in some valid frame the degree-(d1*d2) eliminant is
    square-free, i.e. every intersection multiplicity is one, so the
    intersection consists of exactly d1*d2 reduced points.  Raises
    NotTransversal when the schedule finds no such frame.
    """
    _check_pair(F, G)
    n = F.total_degree() * G.total_degree()
    budget = n * (n - 1) // 2 + 1
    for base in _BASES:
        valid = 0
        t_limit = budget + F.total_degree() + G.total_degree() + 8
        for t in range(t_limit):
            got = _pair_frame_count(F, G, base, t)
            if got is None:
                continue
            if got[1]:
                # square-free eliminant of full degree: n distinct points,
                # so every intersection multiplicity is one
                return n
            valid += 1
            if valid >= budget:
                # among `budget` valid shears of one base at least one is
                # collision-free; there the non-square-free eliminant proves
                # a multiplicity >= 2 somewhere
                raise NotTransversal(
                    f"{F.text()} and {G.text()} do not intersect transversally"
                )
    raise ChartExhausted("no usable frame for the transversality check")


def distinct_intersection_count(F: MultiPoly, G: MultiPoly) -> int:
    """Number of distinct intersection points (no transversality assumed).

    Maximum of the square-free eliminant degree over enough valid shears that
    at least one is collision-free; hitting the Bezout ceiling certifies
    early.
    """
    _check_pair(F, G)
    ceiling = F.total_degree() * G.total_degree()
    needed = ceiling * (ceiling - 1) // 2 + 1
    best = 0
    for base in _BASES:
        valid = 0
        t = 0
        t_limit = needed + F.total_degree() + G.total_degree() + 4
        while valid < needed and t < t_limit:
            got = _pair_frame_count(F, G, base, t)
            t += 1
            if got is None:
                continue
            valid += 1
            if got[0] > best:
                best = got[0]
            if best == ceiling:
                return best
        if valid >= needed:
            return best
    raise ChartExhausted("could not certify a distinct intersection count")
