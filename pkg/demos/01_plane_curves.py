#!/usr/bin/env python3
"""Tour of plane-curve analysis: singular points, reports, transversality.

Run:  python3 demos/01_plane_curves.py
"""

from dualis import PlaneCurve, curve_report, line_transversality, parse_poly, singular_points
from dualis.curvelab import PRIMAL_VARS

print("=" * 64)
print("Plane curves over the rationals")
print("=" * 64)

# A smooth conic has no singular points and chi = 2.
conic = PlaneCurve.from_text("x^2 + y^2 + z^2")
print("\nconic x^2 + y^2 + z^2")
print("  singular points:", singular_points(conic))
print("  report:", curve_report(conic))

# The standard nodal cubic: one node, geometric genus 0, chi = 1
# (the normalization is a sphere, and the node glues two of its points).
nodal = PlaneCurve.from_text("y^2*z - x^3 - x^2*z")
print("\nnodal cubic y^2*z = x^3 + x^2*z")
for s in singular_points(nodal):
    print(f"  {s.kind} at {list(s.point)}, multiplicity {s.multiplicity},"
          f" Euler obstruction {s.euler_obstruction}")
print("  report:", curve_report(nodal))

# The cuspidal cubic: chi = 2 because a cusp has a single branch.
cusp = PlaneCurve.from_text("y^2*z - x^3")
print("\ncuspidal cubic y^2*z = x^3")
print("  report:", curve_report(cusp))

# c0m = chi + delta + kappa  =  -d^2 + 3d + 2 delta + 3 kappa, exactly.
for name, c in (("conic", conic), ("nodal", nodal), ("cusp", cusp)):
    r = curve_report(c)
    closed = -r.d**2 + 3 * r.d + 2 * r.delta + 3 * r.kappa
    print(f"\n  {name}: c0m = chi + delta + kappa = {r.c0m} = {closed} (closed form)")

# Transversality of a line is a certified, exact check: the restriction of
# F to the line must be a square-free binary form of full degree.
print("\nline transversality against the nodal cubic:")
for text in ("z", "x", "x + 2*y + 5*z"):
    line = parse_poly(text, PRIMAL_VARS)
    print(f"  line {text!r}: {line_transversality(nodal, line)}")
