"""Euler characteristics of standard varieties, by exact closed forms.

Projective spaces, smooth quadrics and Grassmannians have cell
decompositions, so their Euler characteristics are cell counts:

    chi(P^n)     = n + 1
    chi(Q_n)     = n + 1 + (1 + (-1)^n) / 2
    chi(Gr(k,n)) = binomial(n, k)

For a smooth complete intersection X of multidegree (d_1, ..., d_r) in P^n
the Euler characteristic is the top Chern number, extracted from the exact
truncated expansion of

    c(TX) = (1 + h)^(n+1) / prod_i (1 + d_i h)

as prod_i d_i times the coefficient of h^(dim X).  All series coefficients
are rationals and the final value is checked to be an integer.

The module also assembles full invariant packages for smooth hypersurfaces
and linear subspaces: the chi values of all generic linear slices, which is
exactly the data the intersection identities consume.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import InvalidParams, NonIntegralResult
from .flopcalc import VarietyInvariants

PROJECTIVE_SPACE = "projective_space"
QUADRIC = "quadric"
GRASSMANNIAN = "grassmannian"


class TruncatedSeries:
    """Power series in one variable, truncated at a fixed order (inclusive)."""

    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients: Sequence[Fraction], order: int):
        if order < 0:
            raise InvalidParams("truncation order must be nonnegative")
        cs = [Fraction(c) for c in coefficients[: order + 1]]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "coefficients", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("TruncatedSeries is immutable")

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.order, self.coefficients))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([Fraction(1)], order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.order != other.order:
            raise InvalidParams("series orders differ")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j in range(0, n + 1 - i):
                b = other.coefficients[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(out, n)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a unit constant term."""
        c0 = self.coefficients[0]
        if c0 == 0:
            raise InvalidParams("series with zero constant term has no inverse")
        n = self.order
        inv = [Fraction(0)] * (n + 1)
        inv[0] = 1 / c0
        for k in range(1, n + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                acc += self.coefficients[i] * inv[k - i]
            inv[k] = -acc / c0
        return TruncatedSeries(inv, n)

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise InvalidParams(f"coefficient {k} beyond truncation order {self.order}")
        return self.coefficients[k]


def one_plus_h_power(exponent: int, order: int) -> TruncatedSeries:
    """(1 + h)^exponent, exactly, to the given order."""
    return TruncatedSeries(
        [Fraction(math.comb(exponent, k)) for k in range(order + 1)], order
    )


def linear_factor(d: int, order: int) -> TruncatedSeries:
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    if order >= 1:
        coeffs[1] = Fraction(d)
    return TruncatedSeries(coeffs, order)


def chi_standard(kind: str, *params: int) -> int:
    """chi of P^n, Q_n or Gr(k,n) by cell count / closed form."""
    if kind == PROJECTIVE_SPACE:
        (n,) = params
        if n < 0:
            raise InvalidParams("projective space needs n >= 0")
        return n + 1
    if kind == QUADRIC:
        (n,) = params
        if n < 0:
            raise InvalidParams("quadric needs n >= 0")
        return n + 1 + (1 + (-1) ** n) // 2
    if kind == GRASSMANNIAN:
        k, n = params
        if not 0 < k < n:
            raise InvalidParams("Grassmannian needs 0 < k < n")
        return math.comb(n, k)
    raise InvalidParams(f"unknown kind {kind!r}")


def chi_smooth_complete_intersection(n: int, degrees: Sequence[int]) -> int:
    """chi of a smooth complete intersection of the given multidegree in P^n."""
    degrees = list(degrees)
    if n < 1 or not 1 <= len(degrees) <= n or any(d < 1 for d in degrees):
        raise InvalidParams(f"bad complete-intersection data n={n}, degrees={degrees}")
    order = n + 1
    series = one_plus_h_power(n + 1, order)
    for d in degrees:
        series = series * linear_factor(d, order).inverse()
    dim = n - len(degrees)
    top = series.coefficient(dim)
    total = top
    for d in degrees:
        total *= d
    if total.denominator != 1:
        raise NonIntegralResult(f"chi came out {total}, not an integer")
    return int(total)


def hypersurface_package(n: int, d: int, label: str | None = None) -> VarietyInvariants:
    """Full invariant package of a smooth degree-d hypersurface in P^n.

    A generic P^j slices it in a smooth degree-d hypersurface of P^j, so the
    slice chi values all come from the complete-intersection closed form.
    Generic linear slices of a smooth variety are transversal.
    """
    if n < 2 or d < 1:
        raise InvalidParams("hypersurface package needs n >= 2, d >= 1")
    chi = chi_smooth_complete_intersection(n, [d])
    slices = [0]
    for j in range(1, n + 1):
        slices.append(chi_smooth_complete_intersection(j, [d]))
    if slices[1] != d:
        raise NonIntegralResult("complementary slice does not reproduce the degree")
    return VarietyInvariants(
        label=label or f"smooth degree-{d} hypersurface in P^{n}",
        n=n,
        dim=n - 1,
        degree=d,
        c0m=chi,
        chi_slices=tuple(slices),
        transversality_certified=True,
    )


def linear_space_package(n: int, m: int, label: str | None = None) -> VarietyInvariants:
    """Invariant package of a linear subspace P^m inside P^n.

    A generic P^j meets P^m in P^(m+j-n) (empty when that is negative), so
    the slice values are chi of projective spaces.
    """
    if not 0 <= m <= n or n < 2:
        raise InvalidParams("linear package needs 0 <= m <= n, n >= 2")
    slices = []
    for j in range(n + 1):
        k = m + j - n
        slices.append(0 if k < 0 else k + 1)
    return VarietyInvariants(
        label=label or f"P^{m} in P^{n}",
        n=n,
        dim=m,
        degree=1,
        c0m=m + 1,
        chi_slices=tuple(slices),
        transversality_certified=True,
    )
