"""Executable checks of the length / rotation-index identities."""
from dataclasses import asdict, dataclass, field
import math

import numpy as np
from scipy.optimize import minimize_scalar

from . import curve_core as cc
from .curve_core import ClosedCurve
from .errors import DomainError, HypothesisError, SimplicityError
from .offset import OffsetSpec, SCAN_POINTS, parallel_length

SAFETY = 0.99
REPORT_TOL = 1e-7
SIMPLICITY_POINTS = 4096


@dataclass(frozen=True)
class VerificationReport:
    name: str
    quantities: dict = field(default_factory=dict)
    tolerance: float = REPORT_TOL
    passed: bool = False

    @property
    def residual(self):
        return self.quantities["residual"]

    def to_dict(self):
        return asdict(self)


def _report(name, quantities, tol):
    return VerificationReport(name, quantities, tol, bool(abs(quantities["residual"]) <= tol))


def _closed(curve):
    if not isinstance(curve, ClosedCurve):
        raise DomainError(f"{curve.name} is not a ClosedCurve")


def max_curvature(curve, n=SCAN_POINTS):
    """Largest signed curvature, grid search polished by a bounded minimizer."""
    t = np.linspace(curve.a, curve.b, n + 1)
    k = cc.signed_curvature(curve, t)
    i = int(np.argmax(k))
    lo, hi = t[max(i - 1, 0)], t[min(i + 1, n)]
    res = minimize_scalar(lambda x: -cc.signed_curvature(curve, x), bounds=(lo, hi),
                          method="bounded", options={"xatol": 1e-12 * curve.span})
    return max(float(k[i]), -float(res.fun))


def max_safe_epsilon(curve):
    """Radius of curvature at the sharpest left turn, or ``inf`` if none.

    Offsets must stay strictly below this value for the length identity.
    """
    _closed(curve)
    kmax = max_curvature(curve)
    return math.inf if kmax <= 0 else 1.0 / kmax


def _check_epsilon(curve, epsilon):
    if epsilon < 0:
        raise HypothesisError("offset distance must be non-negative")
    limit = SAFETY * max_safe_epsilon(curve)
    if epsilon > limit:
        raise HypothesisError(
            f"eps={epsilon} exceeds the safe range (<= {limit:.6g}, "
            f"{SAFETY:g} x radius of curvature at the sharpest left turn)")


def verify_theorem1(curve, epsilon, tolerance=None):
    """Check ``L(alpha) - L(beta) == 2*pi*eps*omega``."""
    _closed(curve)
    epsilon = float(epsilon)
    _check_epsilon(curve, epsilon)
    L_alpha = cc.length(curve)
    L_beta = parallel_length(OffsetSpec(curve, epsilon))
    omega = cc.rotation_index(curve)
    target = 2 * math.pi * epsilon * omega
    diff = L_alpha - L_beta
    tol = REPORT_TOL * curve.diagonal if tolerance is None else tolerance
    return _report("theorem1", {
        "epsilon": epsilon, "L_alpha": L_alpha, "L_beta": L_beta, "omega": omega,
        "difference": diff, "two_pi_eps_omega": target, "residual": diff - target,
    }, tol)


def verify_proposition4(curve, tolerance=REPORT_TOL):
    """Check ``K == 2*pi*omega``; both sides are dimensionless."""
    _closed(curve)
    K = cc.total_curvature(curve)
    omega = cc.rotation_index(curve)
    return _report("proposition4", {
        "K": K, "omega": omega, "two_pi_omega": 2 * math.pi * omega,
        "residual": K - 2 * math.pi * omega,
    }, tolerance)


def _segments_cross(p, q, r, s, tol):
    """Closed-segment intersection test, broadcasting over leading axes."""
    def orient(a, b, c):
        return ((b[..., 0] - a[..., 0]) * (c[..., 1] - a[..., 1])
                - (b[..., 1] - a[..., 1]) * (c[..., 0] - a[..., 0]))

    o1, o2 = orient(p, q, r), orient(p, q, s)
    o3, o4 = orient(r, s, p), orient(r, s, q)
    return (o1 * o2 <= tol) & (o3 * o4 <= tol) & _boxes_overlap(p, q, r, s)


def _boxes_overlap(p, q, r, s):
    return ((np.maximum(p[..., 0], q[..., 0]) >= np.minimum(r[..., 0], s[..., 0]))
            & (np.maximum(r[..., 0], s[..., 0]) >= np.minimum(p[..., 0], q[..., 0]))
            & (np.maximum(p[..., 1], q[..., 1]) >= np.minimum(r[..., 1], s[..., 1]))
            & (np.maximum(r[..., 1], s[..., 1]) >= np.minimum(p[..., 1], q[..., 1])))


def self_intersection(points, closed=True, block=256):
    """First pair of non-adjacent crossing segments ``(i, j)``, or None.

    Brute force over all segment pairs; adjacent segments (and the first and
    last segment of a closed polyline) are skipped.
    """
    pts = np.asarray(points, dtype=float)
    if closed:
        pts = np.vstack([pts, pts[:1]])
    p, q = pts[:-1], pts[1:]
    m = len(p)
    scale = float(np.ptp(pts, axis=0).max()) or 1.0
    tol = (1e-14 * scale * scale) ** 2
    idx = np.arange(m)
    for start in range(0, m, block):
        i = idx[start:start + block, None]
        j = idx[None, :]
        hit = _segments_cross(p[i], q[i], p[j], q[j], tol)
        hit &= j > i + 1
        if closed:
            hit &= ~((i == 0) & (j == m - 1))
        if hit.any():
            a, b = np.argwhere(hit)[0]
            return int(start + a), int(b)
    return None


def is_simple(curve, n=SIMPLICITY_POINTS):
    t = np.linspace(curve.a, curve.b, n, endpoint=False)
    return self_intersection(cc.evaluate(curve, t), closed=True) is None


def verify_corollary5(curve, epsilon, tolerance=None):
    """Check ``|L(beta) - L(alpha)| == 2*pi*eps`` for a simple closed curve.

    The realized sign of ``L(beta) - L(alpha)`` is reported; it is ``-sign(omega)``.
    """
    _closed(curve)
    if not is_simple(curve):
        raise SimplicityError(f"{curve.name} intersects itself")
    epsilon = float(epsilon)
    _check_epsilon(curve, epsilon)
    L_alpha = cc.length(curve)
    L_beta = parallel_length(OffsetSpec(curve, epsilon))
    omega = cc.rotation_index(curve)
    change = L_beta - L_alpha
    tol = REPORT_TOL * curve.diagonal if tolerance is None else tolerance
    return _report("corollary5", {
        "epsilon": epsilon, "L_alpha": L_alpha, "L_beta": L_beta, "omega": omega,
        "change": change, "sign": int(np.sign(change)),
        "two_pi_eps": 2 * math.pi * epsilon,
        "residual": abs(change) - 2 * math.pi * epsilon,
    }, tol)
