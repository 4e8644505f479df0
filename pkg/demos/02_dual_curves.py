#!/usr/bin/env python3
"""Dual curves by elimination, with the polar oracle as a cross-check.

Run:  python3 demos/02_dual_curves.py
"""

from dualis import (
    PlaneCurve,
    biduality_check,
    curve_report,
    dual_curve_report,
    dual_degree_oracle,
    dual_equation,
)

print("=" * 64)
print("Projective dual curves")
print("=" * 64)

# The dual of a smooth conic is a conic: for y^2 = xz the tangent lines
# sweep out v^2 = 4uw in the dual coordinates (u, v, w).
conic = PlaneCurve.from_text("y^2 - x*z")
eq = dual_equation(conic)
print("\ndual of y^2 - x*z:", eq.D.text())
print("  stripped factors:", [(f.text(), k) for f, k in eq.removed_factors])

# The cuspidal cubic dualizes to another cuspidal cubic.
cusp = PlaneCurve.from_text("y^2*z - x^3")
eq = dual_equation(cusp)
print("\ndual of y^2*z - x^3:", eq.D.text())
print("  dual report:", dual_curve_report(cusp))

# The polar oracle counts the dual degree without ever writing down the
# dual equation: tangency points of tangent lines through a generic
# witness, counted by certified elimination.
for text, label in (
    ("y^2 - x*z", "conic"),
    ("y^2*z - x^3 - x^2*z", "nodal cubic"),
    ("y^2*z - x^3", "cuspidal cubic"),
    ("x^4 + y^4 + z^4", "Fermat quartic"),
):
    c = PlaneCurve.from_text(text)
    print(f"\n{label}: dual degree by polar oracle = {dual_degree_oracle(c)}")
    if c.degree <= 3:
        print(f"  elimination agrees: deg = {dual_equation(c).d_dual}")
        print(f"  biduality check: {biduality_check(c)}")

# A nodal cubic with three rational flexes: its dual is a tricuspidal
# quartic whose cusps are rational, so the full report of the dual is
# computable directly from the dual equation.
rf = PlaneCurve.from_text("z^3 - x^2*y - x*y^2 - 3*x*y*z")
eq = dual_equation(rf)
print("\nrational-flex nodal cubic dual:", eq.D.text())
print("  report of the dual quartic:", curve_report(PlaneCurve(eq.D)))
