# Parallel curves and their lengths
#
# A parallel curve moves every point of a curve a fixed distance eps along the
# left normal.  Here we look at how its length relates to the original one.

import math

import numpy as np

from parcurve import catalog, curve_core as cc
from parcurve.offset import (OffsetSpec, find_offset_singularities, parallel_curve,
                             parallel_length, parallel_length_closed_form)

# A counter-clockwise circle of radius 2.  The left normal points inward, so the
# parallel at eps = 0.5 is the concentric circle of radius 1.5.

circle = catalog.circle(2.0)
spec = OffsetSpec(circle, 0.5)
print("L(alpha) =", cc.length(circle))
print("L(beta)  =", parallel_length(spec), " 3*pi =", 3 * math.pi)

# The length of the parallel is the integral of |1 - eps*kappa| ds.  When
# eps*kappa stays below 1 this is L - eps*K, with K the total curvature.

print(parallel_length_closed_form(spec))

# Past the radius of curvature the parallel develops cusps.  The ellipse with
# semi-axes 2 and 1 has kappa = 2 at both ends of its major axis, so at
# eps = 0.6 the offset speed changes sign four times.

ellipse = catalog.ellipse(2.0, 1.0)
sing = find_offset_singularities(OffsetSpec(ellipse, 0.6))
print("singular parameters:", np.round(sing.params, 6))

# Two independent routes to the same length: the integral above, and the plain
# length integral applied to the (non-regular) parallel curve itself.

spec = OffsetSpec(ellipse, 0.6)
print(parallel_length(spec), cc.length(parallel_curve(spec)))

# An open half circle of radius 3 pushed past its centre by eps = 4 turns into
# a half circle of radius 1 on the other side: length (R + 1)pi - R pi = pi.

half = OffsetSpec(catalog.half_circle(3.0), 4.0)
print(parallel_length(half), parallel_length_closed_form(half).branch)
