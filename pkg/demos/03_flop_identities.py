#!/usr/bin/env python3
"""The flop identity checked on curve pairs assembled from first principles.

Run:  python3 demos/03_flop_identities.py
"""

from dualis import PlaneCurve, check_identity
from dualis.corpus import build_curve_pair
from dualis.flopcalc import CONORMAL, INTRO

print("=" * 64)
print("Plucker-type identity for dual varieties")
print("=" * 64)
print("""
For transversal pairs S1, S2 in P^2 and their duals, the quantity

    C_S1.C_S2 + (C_S1.P^2)(C_S2.P^2) / ((-1)^3 * 3)

is the same on both sides of the duality.  Every input below is computed:
chi of the intersections by certified elimination, c0m from singular-point
analysis, dual curves by discriminant elimination.
""")

pairs = [
    ("x", "y", "two lines"),
    ("x + y + z", "y^2 - x*z", "line and conic"),
    ("y^2 - x*z", "x^2 + y^2 - z^2", "two conics"),
    ("x + y + z", "y^2*z - x^3", "line and cuspidal cubic"),
    ("x^2 + y^2 - z^2", "y^2*z - x^3", "conic and cuspidal cubic"),
]
for t1, t2, label in pairs:
    data = build_curve_pair(PlaneCurve.from_text(t1), PlaneCurve.from_text(t2))
    print(f"{label}:")
    print(f"  chi(S1 ^ S2) = {data.chi_cap},  chi(S1* ^ S2*) = {data.chi_cap_dual}")
    for form in (CONORMAL, INTRO):
        rep = check_identity(
            data.s1, data.s2, data.d1, data.d2,
            data.chi_cap, data.chi_cap_dual, form=form,
        )
        print(f"  {form:8s}: lhs = {rep.lhs} = rhs = {rep.rhs}  holds={rep.holds}")
    print()

print("The two-lines case reproduces the hallmark value 1 - 4/3 = -1/3:")
print("the conormal Lagrangians of two lines meet once, while their duals")
print("(two distinct points) are disjoint - the correction term restores")
print("the balance exactly.")
