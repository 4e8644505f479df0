"""Exact scalar and polynomial arithmetic.

Every scalar in dualis is an arbitrary-precision rational: we use
:class:`fractions.Fraction`, which already maintains the invariants we need
(always in lowest terms, positive denominator, zero is 0/1).  No floating
point appears anywhere in the package.

A :class:`MultiPoly` is a sparse multivariate polynomial over the rationals:

    variables  --  ordered tuple of symbol names, e.g. ("x", "y", "z")
    terms      --  dict mapping exponent tuples to nonzero Fraction
                   coefficients; x^2*y is {(2, 1, 0): Fraction(1)}

Zero coefficients are never stored, so two polynomials are equal as values
exactly when their representations are equal.  Printing uses graded
lexicographic order (total degree first, then lex on exponents), which makes
``parse(print(p)) == p`` a fixed point.

On top of the polynomial ring the module provides the elimination kernel:
Sylvester matrices (rows of the first operand first), determinants by
fraction-free Bareiss elimination over the polynomial ring, resultants,
discriminants, multivariate gcd by a primitive polynomial remainder sequence,
and square-free parts.  A hard guardrail refuses Sylvester matrices larger
than 64x64 so that a degenerate input fails fast instead of hanging.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import (
    DegenerateInput,
    DegreeGuardrail,
    DegreeTooLow,
    PolySyntaxError,
    SharedVariableMismatch,
    UnknownVariableError,
    ZeroInput,
)

Rational = Fraction
Exponents = tuple  # tuple[int, ...], one entry per variable

SYLVESTER_LIMIT = 64

_ZERO = Fraction(0)
_ONE = Fraction(1)


def format_rational(q: Fraction) -> str:
    """Render a rational as ``p/q`` (always with an explicit denominator)."""
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise PolySyntaxError(f"bad rational literal {text!r}") from exc


def _grad_lex_key(exps: Exponents):
    return (sum(exps), exps)


class MultiPoly:
    """Sparse multivariate polynomial with exact rational coefficients.

    Instances are immutable by convention: all operations return new
    polynomials, so values are safe to share between threads.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponents, Fraction]):
        variables = tuple(variables)
        clean = {}
        nvars = len(variables)
        for exps, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for variables {variables}")
            clean[exps] = clean.get(exps, _ZERO) + coeff
            if clean[exps] == 0:
                del clean[exps]
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("MultiPoly is immutable")

    # --- constructors ---

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def const(cls, variables: Sequence[str], value) -> "MultiPoly":
        value = Fraction(value)
        if value == 0:
            return cls.zero(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise UnknownVariableError(f"{name!r} not among {variables}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: _ONE})

    # --- basic predicates ---

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return _ZERO
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        i = self._index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def used_variables(self) -> tuple:
        used = []
        for i, v in enumerate(self.variables):
            if any(e[i] > 0 for e in self.terms):
                used.append(v)
        return tuple(used)

    def _index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariableError(f"{name!r} not among {self.variables}") from None

    # --- ring operations ---

    def _check_ring(self, other: "MultiPoly"):
        if self.variables != other.variables:
            raise SharedVariableMismatch(
                f"variable mismatch: {self.variables} vs {other.variables}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.variables, other)
        self._check_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, _ZERO) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                return MultiPoly.zero(self.variables)
            return MultiPoly(self.variables, {e: c * q for e, c in self.terms.items()})
        self._check_ring(other)
        if not self.terms or not other.terms:
            return MultiPoly.zero(self.variables)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, _ZERO) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # --- calculus and evaluation ---

    def derivative(self, name: str) -> "MultiPoly":
        i = self._index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
            out[ne] = out.get(ne, _ZERO) + c * e[i]
        return MultiPoly(self.variables, out)

    def evaluate(self, point: Mapping[str, Union[int, Fraction]]) -> Fraction:
        """Evaluate at a full rational point."""
        vals = [Fraction(point[v]) for v in self.variables]
        total = _ZERO
        for e, c in self.terms.items():
            term = c
            for val, exp in zip(vals, e):
                if exp:
                    term *= val**exp
            total += term
        return total

    def substitute(self, mapping: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials for variables.

        Every variable of ``self`` must be mapped; all images must live in a
        common ring, which becomes the ring of the result.
        """
        images = [mapping[v] for v in self.variables]
        ring = images[0].variables
        for p in images:
            if p.variables != ring:
                raise SharedVariableMismatch("substitution images disagree on ring")
        result = MultiPoly.zero(ring)
        pow_cache: list[dict] = [dict() for _ in images]

        def power(i: int, n: int) -> MultiPoly:
            cache = pow_cache[i]
            if n not in cache:
                cache[n] = images[i] ** n
            return cache[n]

        for e, c in self.terms.items():
            term = MultiPoly.const(ring, c)
            for i, exp in enumerate(e):
                if exp:
                    term = term * power(i, exp)
            result = result + term
        return result

    def restrict_variables(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-express in a smaller/reordered variable tuple.

        Raises if a dropped variable actually occurs.
        """
        variables = tuple(variables)
        positions = []
        for v in variables:
            positions.append(self._index(v))
        keep = set(positions)
        for i, v in enumerate(self.variables):
            if i not in keep and any(e[i] > 0 for e in self.terms):
                raise UnknownVariableError(f"variable {v!r} still occurs; cannot drop it")
        out = {}
        for e, c in self.terms.items():
            out[tuple(e[i] for i in positions)] = c
        return MultiPoly(variables, out)

    def rename_variables(self, variables: Sequence[str]) -> "MultiPoly":
        variables = tuple(variables)
        if len(variables) != len(self.variables):
            raise ValueError("rename needs the same number of variables")
        return MultiPoly(variables, dict(self.terms))

    # --- leading data, content, normalization ---

    def leading(self) -> tuple:
        """(exponents, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ZeroInput("zero polynomial has no leading term")
        e = max(self.terms, key=_grad_lex_key)
        return e, self.terms[e]

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if not self.terms:
            return _ZERO
        num = 0
        den = 1
        for c in self.terms.values():
            num = math.gcd(num, abs(c.numerator))
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "MultiPoly":
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        c = self.content()
        _, lead = self.leading()
        if lead < 0:
            c = -c
        return self * (1 / c)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda item: _grad_lex_key(item[0]), reverse=True)

    # --- printing ---

    def text(self) -> str:
        """Canonical text form in the input grammar (graded-lex descending)."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.variables, e)
                if k > 0
            )
            mag = abs(c)
            if not mono:
                body = str(mag) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            elif mag == 1:
                body = mono
            else:
                coeff = str(mag) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
                body = f"{coeff}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({self.text()!r}, vars={self.variables})"


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+/\d+|\d+|[A-Za-z][A-Za-z0-9_]*|\^|\*|\+|-)")


def parse_poly(text: str, variables: Sequence[str]) -> MultiPoly:
    """Parse the polynomial grammar.

    Terms are separated by ``+``/``-``; a term is ``coeff``,
    ``coeff*monomial`` or ``monomial``; ``coeff`` is an integer or ``p/q``;
    a monomial is ``var``, ``var^k`` or products joined by ``*``.
    Whitespace is insignificant.

    >>> parse_poly("3/2*u*v - w^2", ("u", "v", "w")).text()
    '3/2*u*v - w^2'
    """
    variables = tuple(variables)
    tokens = []
    pos = 0
    stripped = text.strip()
    if not stripped:
        raise PolySyntaxError("empty input")
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m:
            raise PolySyntaxError(f"unexpected character at {stripped[pos:pos+10]!r}")
        tokens.append(m.group(1))
        pos = m.end()

    poly = MultiPoly.zero(variables)
    i = 0
    n = len(tokens)
    first = True
    while i < n:
        sign = 1
        saw_sign = False
        while i < n and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            saw_sign = True
            i += 1
        if i >= n:
            raise PolySyntaxError("dangling sign")
        if not first and not saw_sign:
            raise PolySyntaxError(f"missing +/- before {tokens[i]!r}")
        first = False

        coeff = Fraction(sign)
        exps = [0] * len(variables)
        expect_factor = True
        while True:
            if not expect_factor:
                break
            if i >= n:
                raise PolySyntaxError("term ended unexpectedly")
            tok = tokens[i]
            if re.fullmatch(r"\d+/\d+|\d+", tok):
                coeff *= parse_rational(tok)
                i += 1
            elif re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", tok):
                if tok not in variables:
                    raise UnknownVariableError(f"unknown variable {tok!r}")
                k = 1
                i += 1
                if i < n and tokens[i] == "^":
                    i += 1
                    if i >= n or not re.fullmatch(r"\d+", tokens[i]):
                        raise PolySyntaxError("expected integer exponent after '^'")
                    k = int(tokens[i])
                    i += 1
                exps[variables.index(tok)] += k
            else:
                raise PolySyntaxError(f"unexpected token {tok!r}")
            if i < n and tokens[i] == "*":
                i += 1
                expect_factor = True
            else:
                expect_factor = False
        poly = poly + MultiPoly(variables, {tuple(exps): coeff})
    return poly


# ---------------------------------------------------------------------------
# univariate views
# ---------------------------------------------------------------------------

class UniPolyView:
    """A MultiPoly viewed as univariate in one distinguished variable.

    Coefficients are MultiPoly in the remaining variables of the same ring
    (the distinguished variable simply does not occur in them).
    """

    __slots__ = ("poly", "var", "coeffs")

    def __init__(self, poly: MultiPoly, var: str):
        i = poly._index(var)
        deg = poly.degree_in(var)
        coeffs = [dict() for _ in range(max(deg, 0) + 1)]
        for e, c in poly.terms.items():
            rest = e[:i] + (0,) + e[i + 1 :]
            coeffs[e[i]][rest] = c
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "var", var)
        object.__setattr__(
            self, "coeffs", [MultiPoly(poly.variables, d) for d in coeffs]
        )

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("UniPolyView is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if not self.poly.is_zero() else -1

    @property
    def lc(self) -> MultiPoly:
        if self.poly.is_zero():
            raise ZeroInput("zero polynomial")
        return self.coeffs[-1]


def _coeff_list(poly: MultiPoly, var: str) -> list:
    """Coefficient list [c0, c1, ...] of poly in var (coefficients in same ring)."""
    return UniPolyView(poly, var).coeffs if not poly.is_zero() else []


def _from_coeff_list(coeffs: Sequence[MultiPoly], var: str, variables) -> MultiPoly:
    result = MultiPoly.zero(variables)
    x = MultiPoly.var(variables, var)
    for k, c in enumerate(coeffs):
        if not c.is_zero():
            result = result + c * (x**k)
    return result


# ---------------------------------------------------------------------------
# exact division
# ---------------------------------------------------------------------------

def try_exact_div(f: MultiPoly, g: MultiPoly) -> Optional[MultiPoly]:
    """Return q with f == q*g, or None if g does not divide f."""
    f._check_ring(g)
    if g.is_zero():
        raise ZeroInput("division by the zero polynomial")
    if f.is_zero():
        return MultiPoly.zero(f.variables)
    ge, gc = g.leading()
    q_terms: dict = {}
    r = f
    while not r.is_zero():
        re_, rc = r.leading()
        diff = tuple(a - b for a, b in zip(re_, ge))
        if any(d < 0 for d in diff):
            return None
        c = rc / gc
        q_terms[diff] = q_terms.get(diff, _ZERO) + c
        r = r - MultiPoly(f.variables, {diff: c}) * g
    return MultiPoly(f.variables, q_terms)


def exact_div(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    q = try_exact_div(f, g)
    if q is None:
        raise ValueError(f"{g.text()} does not divide {f.text()}")
    return q


def divides(g: MultiPoly, f: MultiPoly) -> bool:
    return try_exact_div(f, g) is not None


# ---------------------------------------------------------------------------
# multivariate gcd (primitive PRS)
# ---------------------------------------------------------------------------

def _pseudo_rem(a: list, b: list) -> list:
    """Pseudo-remainder of coefficient lists (univariate over the coefficient ring)."""
    m, n = len(a) - 1, len(b) - 1
    r = list(a)
    lcb = b[-1]
    for k in range(m - n, -1, -1):
        top = r[n + k]
        if top.is_zero():
            r = [c * lcb for c in r]
            continue
        r = [c * lcb for c in r]
        for j in range(n + 1):
            r[j + k] = r[j + k] - top * b[j]
        assert r[n + k].is_zero()
    while len(r) > 1 and r[-1].is_zero():
        r.pop()
    if len(r) == 1 and r[0].is_zero():
        return []
    return r


def _content_wrt(coeffs: Iterable[MultiPoly]) -> MultiPoly:
    acc = None
    for c in coeffs:
        acc = c if acc is None else poly_gcd(acc, c)
        if acc.is_constant() and not acc.is_zero():
            break
    return acc


def poly_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Gcd in Q[variables], normalized primitive with positive leading coefficient.

    The gcd of two nonzero constants is 1 (units are irrelevant over a field).
    """
    f._check_ring(g)
    if f.is_zero():
        return g.primitive()
    if g.is_zero():
        return f.primitive()
    main = None
    for v in f.variables:
        if f.degree_in(v) > 0 or g.degree_in(v) > 0:
            main = v
            break
    if main is None:
        return MultiPoly.const(f.variables, 1)
    df, dg = f.degree_in(main), g.degree_in(main)
    if df == 0:
        return poly_gcd(f, _content_wrt(_coeff_list(g, main)))
    if dg == 0:
        return poly_gcd(_content_wrt(_coeff_list(f, main)), g)

    fa = _coeff_list(f, main)
    ga = _coeff_list(g, main)
    cf = _content_wrt(fa)
    cg = _content_wrt(ga)
    c = poly_gcd(cf, cg)
    A = [exact_div(x, cf) for x in fa]
    B = [exact_div(x, cg) for x in ga]
    if len(A) < len(B):
        A, B = B, A
    while True:
        R = _pseudo_rem(A, B)
        if not R:
            gcd_pp = B
            break
        if len(R) == 1:
            gcd_pp = None
            break
        cr = _content_wrt(R)
        A, B = B, [exact_div(x, cr) for x in R]
    if gcd_pp is None:
        result = c
    else:
        cb = _content_wrt(gcd_pp)
        pp = _from_coeff_list([exact_div(x, cb) for x in gcd_pp], main, f.variables)
        result = c * pp
    return result.primitive()


def poly_gcd_many(polys: Sequence[MultiPoly]) -> MultiPoly:
    acc = None
    for p in polys:
        acc = p if acc is None else poly_gcd(acc, p)
        if acc is not None and acc.is_constant() and not acc.is_zero():
            return MultiPoly.const(p.variables, 1)
    if acc is None:
        raise ZeroInput("gcd of an empty family")
    return acc.primitive() if not acc.is_zero() else acc


def radical(f: MultiPoly) -> MultiPoly:
    """Square-free part with respect to all variables (char 0), primitive."""
    if f.is_zero():
        raise ZeroInput("radical of zero")
    polys = [f] + [f.derivative(v) for v in f.used_variables()]
    g = poly_gcd_many(polys)
    return exact_div(f, g).primitive()


def is_squarefree(f: MultiPoly) -> bool:
    if f.is_zero():
        return False
    polys = [f] + [f.derivative(v) for v in f.used_variables()]
    return poly_gcd_many(polys).is_constant()


# ---------------------------------------------------------------------------
# Sylvester, Bareiss, resultants
# ---------------------------------------------------------------------------

def sylvester_matrix(f: UniPolyView, g: UniPolyView) -> list:
    """Sylvester matrix in the distinguished variable, f-coefficient rows first."""
    if f.var != g.var or f.poly.variables != g.poly.variables:
        raise SharedVariableMismatch("views disagree on variable or ring")
    m, n = f.degree, g.degree
    if m < 0 or n < 0:
        raise ZeroInput("resultant of the zero polynomial")
    if m < 1 and n < 1:
        raise DegenerateInput("both operands constant in the distinguished variable")
    size = m + n
    if size > SYLVESTER_LIMIT:
        raise DegreeGuardrail(f"Sylvester matrix {size}x{size} exceeds {SYLVESTER_LIMIT}")
    ring = f.poly.variables
    zero = MultiPoly.zero(ring)
    fc = list(reversed(f.coeffs))  # leading first
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def bareiss_determinant(matrix: list) -> MultiPoly:
    """Determinant by fraction-free Bareiss elimination.

    Intermediate divisions are exact in the polynomial ring, which keeps
    entries from blowing up into deeply nested rationals.
    """
    n = len(matrix)
    if n == 0:
        raise ZeroInput("empty matrix")
    ring = matrix[0][0].variables
    m = [row[:] for row in matrix]
    sign = 1
    prev = MultiPoly.const(ring, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(ring)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = exact_div(num, prev)
            m[i][k] = MultiPoly.zero(ring)
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant(f: UniPolyView, g: UniPolyView) -> MultiPoly:
    """Resultant in the distinguished variable.

    Determinant of the Sylvester matrix (f rows first); satisfies
    ``Res(f, g) = lc(f)^deg(g) * prod g(alpha_i)`` over the roots of f.

    >>> x = ("x",)
    >>> f = parse_poly("x^2 + 1", x)
    >>> g = parse_poly("x^2 - 1", x)
    >>> resultant(UniPolyView(f, "x"), UniPolyView(g, "x")).text()
    '4'
    """
    return bareiss_determinant(sylvester_matrix(f, g))


def discriminant(f: UniPolyView) -> MultiPoly:
    """Discriminant in the distinguished variable.

    ``(-1)^(d(d-1)/2) * Res(f, f') / lc(f)`` with d = deg f; the division is
    exact and checked.

    >>> p = parse_poly("x^2 + b*x + c", ("x", "b", "c"))
    >>> discriminant(UniPolyView(p, "x")).text()
    'b^2 - 4*c'
    """
    d = f.degree
    if d < 2:
        raise DegreeTooLow("discriminant needs degree >= 2")
    df = UniPolyView(f.poly.derivative(f.var), f.var)
    res = resultant(f, df)
    quo = try_exact_div(res, f.lc)
    assert quo is not None, "lc must divide Res(f, f')"
    return quo if (d * (d - 1) // 2) % 2 == 0 else -quo


def squarefree_part(f: Union[MultiPoly, UniPolyView], var: Optional[str] = None) -> MultiPoly:
    """Square-free part with respect to one distinguished variable.

    For a univariate MultiPoly the variable is inferred.  The result is
    ``f / gcd(f, df/dvar)``, content-normalized so it is primitive with a
    positive leading coefficient.
    """
    if isinstance(f, UniPolyView):
        poly, var = f.poly, f.var
    else:
        poly = f
        if var is None:
            used = poly.used_variables()
            if len(used) > 1:
                raise ValueError("ambiguous variable; pass var= for multivariate input")
            var = used[0] if used else poly.variables[0]
    if poly.is_zero():
        raise ZeroInput("square-free part of zero")
    d = poly.derivative(var)
    if d.is_zero():
        # constant in the distinguished variable
        return poly.primitive()
    g = poly_gcd(poly, d)
    return exact_div(poly, g).primitive()
