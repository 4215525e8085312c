"""Parametric plane curves and their intrinsic differential quantities.

A curve is a vectorized map ``t -> (x, y)`` on ``[a, b]``.  Maps accept a
1-d array of parameters and return an array of shape ``(n, 2)``.  Derivative
maps are optional; missing ones are replaced by central differences.
"""
from dataclasses import dataclass, field, replace
import math
from typing import Callable, Optional

import numpy as np

from .errors import (BoundaryError, DomainError, PrecisionError,
                     RegularityError, SamplingError)
from .quadrature import integrate

Map = Callable[[np.ndarray], np.ndarray]

_EPS = np.finfo(float).eps
_BBOX_SAMPLES = 1025
_ARC_PANELS = 512
_ARC_NODES, _ARC_WEIGHTS = np.polynomial.legendre.leggauss(20)
_LIFT_START = 1024
_LIFT_MAX = 1 << 22
INTEGRALITY_MARGIN = 0.1


@dataclass(frozen=True, eq=False)
class Curve:
    """Plane curve ``t -> position(t)`` on ``[a, b]``.

    ``d1`` and ``d2`` are the analytic first and second derivative maps.
    ``step`` overrides the finite-difference step used when they are absent;
    ``speed_floor`` overrides the scale-aware regularity threshold.
    """

    position: Map
    a: float
    b: float
    d1: Optional[Map] = None
    d2: Optional[Map] = None
    step: Optional[float] = None
    speed_floor: Optional[float] = None
    name: str = "curve"
    _bbox: tuple = field(init=False, repr=False)

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not (np.isfinite(a) and np.isfinite(b) and a < b):
            raise DomainError(f"empty parameter domain [{self.a}, {self.b}]")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        pts = _call(self.position, np.linspace(a, b, _BBOX_SAMPLES))
        lo, hi = pts.min(axis=0), pts.max(axis=0)
        object.__setattr__(self, "_bbox", (*lo.tolist(), *hi.tolist()))

    @property
    def span(self):
        return self.b - self.a

    @property
    def bbox(self):
        """``(xmin, ymin, xmax, ymax)`` over a fixed sampling of the curve."""
        return self._bbox

    @property
    def diagonal(self):
        x0, y0, x1, y1 = self._bbox
        return math.hypot(x1 - x0, y1 - y0)

    @property
    def floor(self):
        if self.speed_floor is not None:
            return self.speed_floor
        return 1e-9 * self.diagonal

    @property
    def h1(self):
        if self.step is not None:
            return self.step
        return max(1e-6, np.cbrt(_EPS) * self.span)

    @property
    def h2(self):
        if self.step is not None:
            return self.step
        return max(1e-5, _EPS ** 0.25 * self.span / 4)

    @property
    def periodic(self):
        return False

    def __call__(self, t):
        return evaluate(self, t)


@dataclass(frozen=True, eq=False)
class ClosedCurve(Curve):
    """Curve with ``position(a) == position(b)`` and matching tangent directions."""

    closure_tolerance: Optional[float] = None

    def __post_init__(self):
        super().__post_init__()
        tol = self.closure_tol
        ends = _call(self.position, np.array([self.a, self.b]))
        gap = float(np.hypot(*(ends[0] - ends[1])))
        if gap > tol:
            raise DomainError(f"curve is not closed: endpoint gap {gap:.3e} > {tol:.3e}")
        d = derivative(self, np.array([self.a, self.b]), 1)
        speed = np.hypot(d[:, 0], d[:, 1])
        if np.all(speed > self.floor):
            u = d / speed[:, None]
            turn = float(np.hypot(*(u[0] - u[1])))
            if turn > tol:
                raise DomainError(f"tangent direction not periodic: mismatch {turn:.3e}")

    @property
    def closure_tol(self):
        if self.closure_tolerance is not None:
            return self.closure_tolerance
        return 1e-8 * self.diagonal

    @property
    def periodic(self):
        return True

    @classmethod
    def from_curve(cls, curve, closure_tolerance=None):
        return cls(curve.position, curve.a, curve.b, d1=curve.d1, d2=curve.d2,
                   step=curve.step, speed_floor=curve.speed_floor, name=curve.name,
                   closure_tolerance=closure_tolerance)


def _call(f, t):
    return np.asarray(f(t), dtype=float)


def _params(curve, t):
    """Validate ``t`` against the domain; returns (1-d array, was_scalar)."""
    t = np.asarray(t, dtype=float)
    scalar = t.ndim == 0
    t = np.atleast_1d(t)
    slack = 1e-12 * curve.span
    if np.any(t < curve.a - slack) or np.any(t > curve.b + slack) or not np.all(np.isfinite(t)):
        raise DomainError(f"parameter outside [{curve.a}, {curve.b}]")
    return np.clip(t, curve.a, curve.b), scalar


def _out(values, scalar):
    return values[0] if scalar else values


def _wrap(curve, t):
    return curve.a + np.mod(t - curve.a, curve.span)


def _difference(f, curve, t, order):
    """Central difference of ``f``; periodic wrap or one-sided at open ends."""
    h = curve.h1 if order == 1 else curve.h2
    if curve.periodic:
        fp = _call(f, _wrap(curve, t + h))
        fm = _call(f, _wrap(curve, t - h))
        if order == 1:
            return (fp - fm) / (2 * h)
        return (fp - 2 * _call(f, t) + fm) / (h * h)

    if curve.span < 4 * h:
        raise BoundaryError(f"domain span {curve.span} too short for step {h}")
    out = np.empty((t.size, 2))
    lo = t - h < curve.a
    hi = t + h > curve.b
    mid = ~(lo | hi)
    if mid.any():
        tm = t[mid]
        fp, fm = _call(f, tm + h), _call(f, tm - h)
        if order == 1:
            out[mid] = (fp - fm) / (2 * h)
        else:
            out[mid] = (fp - 2 * _call(f, tm) + fm) / (h * h)
    for mask, sgn in ((lo, 1.0), (hi, -1.0)):
        if not mask.any():
            continue
        t0 = t[mask]
        f0, f1, f2 = (_call(f, t0 + sgn * k * h) for k in range(3))
        if order == 1:
            out[mask] = sgn * (-3 * f0 + 4 * f1 - f2) / (2 * h)
        else:
            f3 = _call(f, t0 + sgn * 3 * h)
            out[mask] = (2 * f0 - 5 * f1 + 4 * f2 - f3) / (h * h)
    return out


def _difference5(f, curve, t):
    """Fourth-order central difference, used to differentiate an analytic ``d1``."""
    h = max(1e-6, _EPS ** 0.2 * curve.span / 32)
    if curve.periodic:
        pts = [_call(f, _wrap(curve, t + k * h)) for k in (-2, -1, 1, 2)]
    else:
        inside = (t - 2 * h >= curve.a) & (t + 2 * h <= curve.b)
        if not inside.all():
            out = _difference(f, curve, t, 1)
            if inside.any():
                out[inside] = _difference5(f, curve, t[inside])
            return out
        pts = [_call(f, t + k * h) for k in (-2, -1, 1, 2)]
    return (pts[0] - 8 * pts[1] + 8 * pts[2] - pts[3]) / (12 * h)


def evaluate(curve, t):
    """Point(s) ``curve(t)``; raises DomainError outside ``[a, b]``."""
    t, scalar = _params(curve, t)
    return _out(_call(curve.position, t), scalar)


def derivative(curve, t, order=1):
    """First or second derivative with respect to the curve parameter."""
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    t, scalar = _params(curve, t)
    if order == 1:
        d = _call(curve.d1, t) if curve.d1 is not None else _difference(curve.position, curve, t, 1)
    elif curve.d2 is not None:
        d = _call(curve.d2, t)
    elif curve.d1 is not None:
        d = _difference5(curve.d1, curve, t)
    else:
        d = _difference(curve.position, curve, t, 2)
    return _out(d, scalar)


def speed(curve, t):
    d = derivative(curve, t, 1)
    return np.hypot(d[..., 0], d[..., 1])


def _regular_d1(curve, t):
    d = derivative(curve, t, 1)
    v = np.hypot(d[:, 0], d[:, 1])
    bad = v <= curve.floor
    if bad.any():
        t_bad = float(t[np.argmax(bad)])
        raise RegularityError(f"speed below floor {curve.floor:.3e} at t={t_bad!r}", t=t_bad)
    return d, v


def length(curve, abstol=1e-10, reltol=1e-10):
    """Length as the integral of speed over the parameter domain."""
    return integrate(lambda t: speed(curve, t), curve.a, curve.b, abstol, reltol)


def unit_tangent(curve, t):
    t, scalar = _params(curve, t)
    d, v = _regular_d1(curve, t)
    return _out(d / v[:, None], scalar)


def left_normal(curve, t):
    """Unit tangent rotated counter-clockwise by a right angle."""
    u = np.asarray(unit_tangent(curve, t))
    return np.stack([-u[..., 1], u[..., 0]], axis=-1)


def signed_curvature(curve, t):
    """``det(a', a'') / |a'|**3``; positive where the curve turns left."""
    t, scalar = _params(curve, t)
    d1, v = _regular_d1(curve, t)
    d2 = derivative(curve, t, 2)
    k = (d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0]) / v ** 3
    return _out(k, scalar)


def total_curvature(curve, abstol=1e-10, reltol=1e-10):
    """Integral of curvature against arc length (works for open curves too)."""
    def integrand(t):
        return signed_curvature(curve, t) * speed(curve, t)
    return integrate(integrand, curve.a, curve.b, abstol, reltol)


def check_regular(curve, n=2048):
    """Raise RegularityError unless the speed clears the floor on a grid."""
    _regular_d1(curve, np.linspace(curve.a, curve.b, n + 1))


class ArcLengthMap:
    """Monotone map between the curve parameter and arc length.

    Built from per-panel Gauss sums of the speed; ``forward`` integrates the
    partial panel exactly with the same rule, ``inverse`` runs a bracketed
    Newton iteration.
    """

    def __init__(self, curve, panels=_ARC_PANELS):
        self.curve = curve
        self.knots = np.linspace(curve.a, curve.b, panels + 1)
        lo, hi = self.knots[:-1], self.knots[1:]
        half = 0.5 * (hi - lo)
        x = (0.5 * (hi + lo))[:, None] + half[:, None] * _ARC_NODES
        _, v = _regular_d1(curve, x.ravel())
        pieces = half * (v.reshape(x.shape) @ _ARC_WEIGHTS)
        self.cumulative = np.concatenate([[0.0], np.cumsum(pieces)])
        self.total = float(self.cumulative[-1])

    def _partial(self, k, t):
        lo = self.knots[k]
        half = 0.5 * (t - lo)
        x = (0.5 * (t + lo))[:, None] + half[:, None] * _ARC_NODES
        v = speed(self.curve, x.ravel()).reshape(x.shape)
        return self.cumulative[k] + half * (v @ _ARC_WEIGHTS)

    def _panel(self, t):
        k = np.searchsorted(self.knots, t, side="right") - 1
        return np.clip(k, 0, self.knots.size - 2)

    def forward(self, t):
        """Arc length ``s(t)`` measured from ``a``."""
        t, scalar = _params(self.curve, t)
        return _out(self._partial(self._panel(t), t), scalar)

    def inverse(self, s, iterations=60):
        """Parameter ``t`` with ``forward(t) == s``."""
        s = np.asarray(s, dtype=float)
        scalar = s.ndim == 0
        s = np.atleast_1d(s)
        slack = 1e-12 * max(self.total, 1.0)
        if np.any(s < -slack) or np.any(s > self.total + slack):
            raise DomainError(f"arc length outside [0, {self.total}]")
        s = np.clip(s, 0.0, self.total)
        k = np.searchsorted(self.cumulative, s, side="right") - 1
        k = np.clip(k, 0, self.knots.size - 2)
        lo, hi = self.knots[k], self.knots[k + 1]
        frac = (s - self.cumulative[k]) / (self.cumulative[k + 1] - self.cumulative[k])
        t = lo + frac * (hi - lo)
        tol = 1e-15 * max(abs(self.curve.a), abs(self.curve.b), self.curve.span)
        for _ in range(iterations):
            r = self._partial(k, t) - s
            lo = np.where(r < 0, t, lo)
            hi = np.where(r > 0, t, hi)
            step = r / speed(self.curve, t)
            t_new = t - step
            out = (t_new <= lo) | (t_new >= hi)
            t_new = np.where(out, 0.5 * (lo + hi), t_new)
            done = np.abs(t_new - t) <= tol
            t = t_new
            if done.all():
                break
        return _out(t, scalar)

    def reparametrized(self):
        """The same curve traversed at unit speed on ``[0, total]``."""
        curve = self.curve

        def pos(s):
            return evaluate(curve, self.inverse(s))

        def d1(s):
            return unit_tangent(curve, self.inverse(s))

        def d2(s):
            t = self.inverse(s)
            return signed_curvature(curve, t)[:, None] * left_normal(curve, t)

        cls = ClosedCurve if curve.periodic else Curve
        return cls(pos, 0.0, self.total, d1=d1, d2=d2, name=f"{curve.name}[s]")


def arc_length_param(curve):
    check_regular(curve)
    return ArcLengthMap(curve)


@dataclass(frozen=True)
class AngleLift:
    """Continuous tangent angle ``theta(s)`` along a closed curve.

    ``s_samples``/``theta_samples`` hold the unwrapped angle on the sampling
    grid that satisfied the refinement criterion; ``theta`` evaluates the lift
    anywhere by picking the branch of ``atan2`` nearest the interpolated grid.
    """

    arc: ArcLengthMap
    theta0: float
    s_samples: np.ndarray
    theta_samples: np.ndarray

    @property
    def increment(self):
        return float(self.theta_samples[-1] - self.theta_samples[0])

    def theta(self, s):
        s = np.asarray(s, dtype=float)
        scalar = s.ndim == 0
        s = np.atleast_1d(s)
        t = self.arc.inverse(s)
        u = unit_tangent(self.arc.curve, t)
        raw = np.arctan2(u[:, 1], u[:, 0])
        ref = np.interp(s, self.s_samples, self.theta_samples)
        return _out(raw + 2 * np.pi * np.round((ref - raw) / (2 * np.pi)), scalar)


def _wrap_pi(x):
    """Map angles into (-pi, pi]."""
    return np.pi - np.mod(np.pi - x, 2 * np.pi)


def angle_lift(curve):
    if not isinstance(curve, ClosedCurve):
        raise DomainError("angle lift needs a ClosedCurve")
    n = _LIFT_START
    while True:
        t = np.linspace(curve.a, curve.b, n + 1)
        u = unit_tangent(curve, t)
        ang = np.arctan2(u[:, 1], u[:, 0])
        inc = _wrap_pi(np.diff(ang))
        if np.max(np.abs(inc)) < np.pi / 2:
            break
        n *= 2
        if n > _LIFT_MAX:
            raise SamplingError(f"tangent angle still jumps by >= pi/2 with {n // 2} samples")
    theta = ang[0] + np.concatenate([[0.0], np.cumsum(inc)])
    arc = ArcLengthMap(curve)
    return AngleLift(arc, float(ang[0]), arc.forward(t), theta)


def rotation_index(curve, lift=None):
    """Net number of turns of the tangent along a closed curve."""
    if not isinstance(curve, ClosedCurve):
        raise DomainError("rotation index is defined for closed curves only")
    lift = lift or angle_lift(curve)
    raw = lift.increment / (2 * np.pi)
    omega = round(raw)
    if abs(raw - omega) >= INTEGRALITY_MARGIN:
        raise PrecisionError(f"winding {raw:.6f} is not close to an integer")
    return int(omega)


# -- derived curves -----------------------------------------------------------

def _like(curve, position, a, b, d1, d2, name):
    kw = dict(position=position, a=a, b=b, d1=d1, d2=d2, name=name, step=None, speed_floor=None)
    return replace(curve, **kw)


def reversed_curve(curve):
    """Same trace, opposite orientation: ``t -> a + b - t``."""
    a, b = curve.a, curve.b
    f, g1, g2 = curve.position, curve.d1, curve.d2
    d1 = (lambda t: -_call(g1, a + b - t)) if g1 else None
    d2 = (lambda t: _call(g2, a + b - t)) if g2 else None
    return _like(curve, lambda t: _call(f, a + b - t), a, b, d1, d2, f"reversed({curve.name})")


def transformed(curve, matrix, shift=(0.0, 0.0)):
    """Image of the curve under ``x -> matrix @ x + shift``."""
    m = np.asarray(matrix, dtype=float)
    c = np.asarray(shift, dtype=float)
    f, g1, g2 = curve.position, curve.d1, curve.d2
    d1 = (lambda t: _call(g1, t) @ m.T) if g1 else None
    d2 = (lambda t: _call(g2, t) @ m.T) if g2 else None
    return _like(curve, lambda t: _call(f, t) @ m.T + c, curve.a, curve.b, d1, d2, curve.name)


def reparametrized(curve, phi, u0, u1, dphi, ddphi):
    """Curve ``u -> curve(phi(u))`` for a monotone increasing ``phi``."""
    f, g1, g2 = curve.position, curve.d1, curve.d2

    def pos(u):
        return _call(f, np.clip(phi(u), curve.a, curve.b))

    def d1(u):
        return derivative(curve, np.clip(phi(u), curve.a, curve.b), 1) * dphi(u)[:, None]

    def d2(u):
        t = np.clip(phi(u), curve.a, curve.b)
        return (derivative(curve, t, 2) * dphi(u)[:, None] ** 2
                + derivative(curve, t, 1) * ddphi(u)[:, None])

    return _like(curve, pos, u0, u1, d1, d2, f"{curve.name}∘phi")
