"""Analytic test curves and spline fits through sampled points."""
import numpy as np
from scipy.interpolate import CubicSpline

from .curve_core import ClosedCurve, Curve, reversed_curve

TWO_PI = 2 * np.pi


def _xy(x, y):
    return np.stack([x, y], axis=-1)


def _oriented(curve, orientation):
    if orientation == "ccw":
        return curve
    if orientation == "cw":
        return reversed_curve(curve)
    raise ValueError(f"orientation must be 'ccw' or 'cw', got {orientation!r}")


def circle(R=1.0, orientation="ccw", center=(0.0, 0.0)):
    if R <= 0:
        raise ValueError("radius must be positive")
    cx, cy = center
    c = ClosedCurve(
        lambda t: _xy(cx + R * np.cos(t), cy + R * np.sin(t)), 0.0, TWO_PI,
        d1=lambda t: _xy(-R * np.sin(t), R * np.cos(t)),
        d2=lambda t: _xy(-R * np.cos(t), -R * np.sin(t)),
        name=f"circle(R={R})")
    return _oriented(c, orientation)


def ellipse(a=2.0, b=1.0, orientation="ccw"):
    if a <= 0 or b <= 0:
        raise ValueError("semi-axes must be positive")
    c = ClosedCurve(
        lambda t: _xy(a * np.cos(t), b * np.sin(t)), 0.0, TWO_PI,
        d1=lambda t: _xy(-a * np.sin(t), b * np.cos(t)),
        d2=lambda t: _xy(-a * np.cos(t), -b * np.sin(t)),
        name=f"ellipse(a={a}, b={b})")
    return _oriented(c, orientation)


def ellipse_curvature(a, b, t):
    """Closed-form signed curvature of the counter-clockwise ellipse."""
    return a * b / (a * a * np.sin(t) ** 2 + b * b * np.cos(t) ** 2) ** 1.5


def limacon(a=2.0, b=1.0, orientation="ccw"):
    """Pascal's snail ``(b + a cos t)(cos t, sin t)``; a > b > 0 gives an inner loop."""
    if a <= 0 or b <= 0:
        raise ValueError("limacon parameters must be positive")
    if a == b:
        raise ValueError("a == b is the cardioid, which has a cusp")
    c = ClosedCurve(
        lambda t: _xy((b + a * np.cos(t)) * np.cos(t), (b + a * np.cos(t)) * np.sin(t)),
        0.0, TWO_PI,
        d1=lambda t: _xy(-b * np.sin(t) - a * np.sin(2 * t), b * np.cos(t) + a * np.cos(2 * t)),
        d2=lambda t: _xy(-b * np.cos(t) - 2 * a * np.cos(2 * t),
                         -b * np.sin(t) - 2 * a * np.sin(2 * t)),
        name=f"limacon(a={a}, b={b})")
    return _oriented(c, orientation)


def figure_eight(orientation="ccw"):
    """Lemniscate of Gerono ``(sin t, sin t cos t)``; rotation index 0."""
    c = ClosedCurve(
        lambda t: _xy(np.sin(t), np.sin(t) * np.cos(t)), 0.0, TWO_PI,
        d1=lambda t: _xy(np.cos(t), np.cos(2 * t)),
        d2=lambda t: _xy(-np.sin(t), -2 * np.sin(2 * t)),
        name="figure_eight")
    return _oriented(c, orientation)


def half_circle(R=1.0, orientation="ccw"):
    """Open upper half circle ``(R cos t, R sin t)``, ``t`` in ``[0, pi]``."""
    if R <= 0:
        raise ValueError("radius must be positive")
    c = Curve(
        lambda t: _xy(R * np.cos(t), R * np.sin(t)), 0.0, np.pi,
        d1=lambda t: _xy(-R * np.sin(t), R * np.cos(t)),
        d2=lambda t: _xy(-R * np.cos(t), -R * np.sin(t)),
        name=f"half_circle(R={R})")
    return _oriented(c, orientation)


def segment(p0=(0.0, 0.0), p1=(1.0, 0.0)):
    """Straight segment parametrized on ``[0, 1]``."""
    p0 = np.asarray(p0, dtype=float)
    d = np.asarray(p1, dtype=float) - p0
    return Curve(
        lambda t: p0 + np.multiply.outer(t, d), 0.0, 1.0,
        d1=lambda t: np.broadcast_to(d, (np.size(t), 2)).copy(),
        d2=lambda t: np.zeros((np.size(t), 2)),
        name="segment")


def spline_through(points, closed=True):
    """Cubic spline through ``points`` parametrized by cumulative chord length.

    Closed input gets a periodic spline (the first point is repeated at the
    end if needed), so curvature queries are well defined.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 3:
        raise ValueError("need at least 3 points of shape (n, 2)")
    if closed and not np.array_equal(pts[0], pts[-1]):
        pts = np.vstack([pts, pts[:1]])
    chord = np.hypot(*np.diff(pts, axis=0).T)
    if np.any(chord == 0):
        raise ValueError("repeated consecutive points")
    u = np.concatenate([[0.0], np.cumsum(chord)])
    spl = CubicSpline(u, pts, bc_type="periodic" if closed else "natural")
    d1, d2 = spl.derivative(1), spl.derivative(2)
    cls = ClosedCurve if closed else Curve
    return cls(spl, 0.0, float(u[-1]), d1=d1, d2=d2, name="spline")


CATALOG = {
    "circle": circle,
    "ellipse": ellipse,
    "limacon": limacon,
    "figure_eight": figure_eight,
    "half_circle": half_circle,
}
