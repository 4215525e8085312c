"""Parallel curves, curvature and rotation index of plane curves."""
from .curve_core import (ArcLengthMap, AngleLift, ClosedCurve, Curve, angle_lift,
                         arc_length_param, derivative, evaluate, left_normal, length,
                         rotation_index, signed_curvature, total_curvature, unit_tangent)
from .offset import (OffsetSpec, SingularitySet, evolute, find_offset_singularities,
                     offset_curvature, offset_speed, parallel_curve, parallel_length,
                     parallel_length_closed_form)
from .theorems import (VerificationReport, max_safe_epsilon, verify_corollary5,
                       verify_proposition4, verify_theorem1)
from .crofton import (CroftonEstimate, Line, Polyline, RotationIndexEstimate,
                      count_intersections, crofton_length, estimate_rotation_index,
                      sample_polyline)
from . import catalog

__version__ = "0.1.0"
