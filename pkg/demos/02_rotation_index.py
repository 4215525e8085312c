# Rotation index and the length difference
#
# For a closed curve, L(alpha) - L(beta) = 2*pi*eps*omega as long as eps stays
# below the smallest radius of curvature on the left-turning parts.

from parcurve import catalog, curve_core as cc
from parcurve.theorems import (max_safe_epsilon, verify_corollary5,
                               verify_proposition4, verify_theorem1)

curves = {
    "circle": catalog.circle(2.0),
    "ellipse": catalog.ellipse(2.0, 1.0),
    "limacon": catalog.limacon(2.0, 1.0),
    "figure_eight": catalog.figure_eight(),
}

for name, curve in curves.items():
    print(f"{name:13s} omega = {cc.rotation_index(curve):+d}  "
          f"K = {cc.total_curvature(curve):+.10f}  safe eps = {max_safe_epsilon(curve):.6f}")

# The limacon has an inner loop, so its tangent turns twice.

r = verify_theorem1(curves["limacon"], 0.05)
print(r.quantities["difference"], r.quantities["two_pi_eps_omega"], r.passed)

# Total curvature is 2*pi*omega; the figure eight has omega = 0.

print(verify_proposition4(curves["figure_eight"]).quantities)

# A simple closed curve has omega = +1 or -1.  Going clockwise, the parallel is
# outside and longer by exactly 2*pi*eps no matter how large the circle is.

earth = catalog.circle(6.371e6, "cw")
print(verify_corollary5(earth, 1.0).quantities["change"])

# Deforming a circle into an ellipse keeps the curve regular, and the length
# difference does not move.

for b in (2.0, 1.5, 1.0):
    print(b, verify_theorem1(catalog.ellipse(2.0, b), 0.1).quantities["difference"])
