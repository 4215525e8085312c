# Measuring length with random lines
#
# Throw random lines at a curve and count crossings.  With directions uniform
# on [0, pi) and offsets uniform within the circumradius R, the mean crossing
# count times pi*R estimates the length.

import math

import numpy as np

from parcurve import catalog
from parcurve.crofton import (Polyline, crofton_length, estimate_rotation_index,
                              sample_polyline)
from parcurve.theorems import max_safe_epsilon

square = Polyline([[0, 0], [1, 0], [1, 1], [0, 1]], closed=True)
print(crofton_length(square, 10 ** 6, seed=1))

# The error shrinks like 1/sqrt(N).  (On a circle every line through the disk
# crosses exactly twice, so there is nothing to shrink; use an ellipse.)

poly = sample_polyline(catalog.ellipse(2.0, 1.0))
for n in (10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6):
    errs = [abs(crofton_length(poly, n, seed=s).mean - poly.length()) for s in range(10)]
    print(f"N = {n:>8d}  mean |error| = {np.mean(errs):.5f}")

# Estimating both L(alpha) and L(beta) this way gives the rotation index
# without ever looking at a tangent vector.

limacon = catalog.limacon(2.0, 1.0)
est = estimate_rotation_index(limacon, 0.5 * max_safe_epsilon(limacon), 4 * 10 ** 6, seed=7)
print(est.raw, est.rounded, est.margin)

# The same estimate at a small offset is noisier, since the signal 2*pi*eps*omega
# shrinks while the Monte Carlo noise does not.

circle = catalog.circle(2.0)
for eps in (0.2, 1.8):
    m = np.mean([estimate_rotation_index(circle, eps, 10 ** 5, seed=s).margin for s in range(10)])
    print(eps, m)
