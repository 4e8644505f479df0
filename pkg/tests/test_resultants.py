"""Resultants, discriminants and square-free parts against independent oracles."""

import random
from fractions import Fraction

import pytest

from dualis.errors import (
    DegenerateInput,
    DegreeGuardrail,
    DegreeTooLow,
    SharedVariableMismatch,
)
from dualis.exact import (
    MultiPoly,
    UniPolyView,
    bareiss_determinant,
    discriminant,
    parse_poly,
    poly_gcd,
    resultant,
    squarefree_part,
    sylvester_matrix,
)

X = ("x",)


def _res(ftext, gtext, variables=X, var="x"):
    f = parse_poly(ftext, variables)
    g = parse_poly(gtext, variables)
    return resultant(UniPolyView(f, var), UniPolyView(g, var))


def _product_of_roots_oracle(roots_f, gtext):
    """Res(f, g) = lc(f)^deg(g) prod g(alpha) for monic f with known roots."""
    g = parse_poly(gtext, X)
    total = Fraction(1)
    for alpha in roots_f:
        total *= g.evaluate({"x": Fraction(alpha)})
    return total


class TestResultant:
    def test_linear_pair(self):
        # oracle: f = x - 2 has the single root 2, g(2) = -1
        assert _product_of_roots_oracle([2], "x - 3") == -1
        assert _res("x - 2", "x - 3") == MultiPoly.const(X, -1)

    def test_shared_root_vanishes(self):
        assert _res("x^2 - 1", "x - 1").is_zero()

    def test_two_quadrics(self):
        # roots of x^2 - 4 are +/-2; oracle for g = x^2 - 1: 3 * 3 = 9
        assert _product_of_roots_oracle([2, -2], "x^2 - 1") == 9
        assert _res("x^2 - 4", "x^2 - 1") == MultiPoly.const(X, 9)
        # the spec pair x^2 + 1 vs x^2 - 1: (i^2 - 1)(-i^2 ... ) = (-2)(-2)
        assert _res("x^2 + 1", "x^2 - 1") == MultiPoly.const(X, 4)

    def test_sylvester_convention_f_rows_first(self):
        f = parse_poly("2*x + b", ("x", "b", "c"))
        g = parse_poly("3*x + c", ("x", "b", "c"))
        rows = sylvester_matrix(UniPolyView(f, "x"), UniPolyView(g, "x"))
        assert rows[0][0] == parse_poly("2", ("x", "b", "c"))
        assert rows[1][0] == parse_poly("3", ("x", "b", "c"))

    def test_symmetry_sign(self):
        rng = random.Random(23)
        for _ in range(25):
            f = _random_uni(rng)
            g = _random_uni(rng)
            m, n = f.degree_in("x"), g.degree_in("x")
            if m < 1 and n < 1:
                continue
            a = resultant(UniPolyView(f, "x"), UniPolyView(g, "x"))
            b = resultant(UniPolyView(g, "x"), UniPolyView(f, "x"))
            assert a == b * ((-1) ** (m * n))

    def test_multiplicativity(self):
        rng = random.Random(29)
        checked = 0
        while checked < 20:
            f = _random_uni(rng, max_deg=3)
            g = _random_uni(rng, max_deg=2)
            h = _random_uni(rng, max_deg=2)
            if min(f.degree_in("x"), g.degree_in("x"), h.degree_in("x")) < 1:
                continue
            lhs = resultant(UniPolyView(f, "x"), UniPolyView(g * h, "x"))
            rhs = resultant(UniPolyView(f, "x"), UniPolyView(g, "x")) * resultant(
                UniPolyView(f, "x"), UniPolyView(h, "x")
            )
            assert lhs == rhs
            checked += 1

    def test_degenerate_and_mismatch_errors(self):
        f = parse_poly("2", X)
        with pytest.raises(DegenerateInput):
            resultant(UniPolyView(f, "x"), UniPolyView(parse_poly("3", X), "x"))
        a = parse_poly("x + y", ("x", "y"))
        with pytest.raises(SharedVariableMismatch):
            resultant(UniPolyView(a, "x"), UniPolyView(a, "y"))

    def test_size_guardrail(self):
        f = parse_poly("x^40 + 1", X)
        g = parse_poly("x^30 - 2", X)
        with pytest.raises(DegreeGuardrail):
            resultant(UniPolyView(f, "x"), UniPolyView(g, "x"))


def _random_uni(rng, max_deg=4):
    coeffs = [rng.randint(-5, 5) for _ in range(max_deg + 1)]
    terms = {(k,): Fraction(c) for k, c in enumerate(coeffs) if c}
    return MultiPoly(X, terms)


class TestBareiss:
    def _cofactor_det(self, m):
        n = len(m)
        if n == 1:
            return m[0][0]
        ring = m[0][0].variables
        total = MultiPoly.zero(ring)
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            term = m[0][j] * self._cofactor_det(minor)
            total = total + (term if j % 2 == 0 else -term)
        return total

    def test_against_cofactor_expansion(self):
        rng = random.Random(31)
        vars2 = ("x", "y")
        for size in (2, 3, 4):
            for _ in range(6):
                m = [
                    [
                        MultiPoly(vars2, {
                            (rng.randint(0, 1), rng.randint(0, 1)):
                            Fraction(rng.randint(-3, 3))
                        })
                        for _ in range(size)
                    ]
                    for _ in range(size)
                ]
                assert bareiss_determinant(m) == self._cofactor_det(m)

    def test_singular_matrix(self):
        one = MultiPoly.const(X, 1)
        assert bareiss_determinant([[one, one], [one, one]]).is_zero()


class TestDiscriminant:
    def test_quadratic(self):
        p = parse_poly("x^2 + b*x + c", ("x", "b", "c"))
        assert discriminant(UniPolyView(p, "x")) == parse_poly(
            "b^2 - 4*c", ("x", "b", "c")
        )

    def test_depressed_cubic(self):
        p = parse_poly("x^3 + p*x + q", ("x", "p", "q"))
        # oracle: expand Res(f, f') = Res(x^3+px+q, 3x^2+p) by hand:
        # lc(f')^3 prod f(beta) over the two roots beta of 3x^2 + p gives
        # 4p^3 + 27q^2, and the sign prefactor for d = 3 is -1
        assert discriminant(UniPolyView(p, "x")) == parse_poly(
            "-4*p^3 - 27*q^2", ("x", "p", "q")
        )

    def test_repeated_root_vanishes(self):
        p = parse_poly("x^2 - 2*x + 1", X)
        assert discriminant(UniPolyView(p, "x")).is_zero()

    def test_degree_too_low(self):
        with pytest.raises(DegreeTooLow):
            discriminant(UniPolyView(parse_poly("x + 1", X), "x"))

    def test_fresh_linear_factor_keeps_nonzero(self):
        # (x-1)(x-2)...(x-k) stays square-free as k grows
        f = parse_poly("x - 1", X)
        for k in range(2, 7):
            f = f * parse_poly(f"x - {k}", X)
            assert not discriminant(UniPolyView(f, "x")).is_zero()


class TestSquarefreePart:
    def test_strip_square(self):
        f = parse_poly("x^3 - 3*x + 2", X)  # (x-1)^2 (x+2)
        assert squarefree_part(f) == parse_poly("x^2 + x - 2", X)

    def test_already_squarefree(self):
        f = parse_poly("x^2 + 1", X)
        assert squarefree_part(f) == f

    def test_pure_power(self):
        assert squarefree_part(parse_poly("x^3", X)) == parse_poly("x", X)

    def test_idempotent(self):
        rng = random.Random(37)
        checked = 0
        while checked < 25:
            f = _random_uni(rng, max_deg=3) * _random_uni(rng, max_deg=2)
            if f.is_zero() or f.degree_in("x") < 1:
                continue
            once = squarefree_part(f)
            assert squarefree_part(once) == once
            g = poly_gcd(once, once.derivative("x"))
            assert g.is_constant()
            checked += 1

    def test_multivariate_coefficients(self):
        p = parse_poly("y^2*x^2 - 2*y^2*x + y^2", ("x", "y"))  # y^2 (x-1)^2
        assert squarefree_part(UniPolyView(p, "x")) == parse_poly("x - 1", ("x", "y"))
