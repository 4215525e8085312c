"""Parallel (offset) curves, their lengths, curvature and evolutes."""
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import bisect, minimize_scalar

from . import curve_core as cc
from .curve_core import ClosedCurve, Curve
from .errors import (BranchError, DegenerateOffsetError, DomainError,
                     InflectionError, SingularityError)
from .quadrature import integrate

SCAN_POINTS = 2048
GRAZING_TOL = 1e-8
DEGENERATE_FRACTION = 0.5
KAPPA_FLOOR = 1e-9
# grid minima of |1 - eps*kappa| above this cannot hide a root between nodes
REFINE_BELOW = 0.05


@dataclass(frozen=True, eq=False)
class OffsetSpec:
    """Base curve together with a non-negative offset distance.

    Offsetting to the right is done by reversing the base orientation
    (``curve_core.reversed_curve``) and using a positive distance.
    """

    base: Curve
    epsilon: float

    def __post_init__(self):
        eps = float(self.epsilon)
        if not np.isfinite(eps) or eps < 0:
            raise ValueError(
                f"offset distance must be >= 0 (got {self.epsilon}); "
                "reverse the base orientation to offset to the other side")
        object.__setattr__(self, "epsilon", eps)


@dataclass(frozen=True)
class SingularitySet:
    """Points where ``epsilon * kappa == 1``, i.e. where the offset has zero speed.

    ``roots`` are arc-length positions on the base, ``params`` the matching
    base parameters, ``grazing[i]`` marks tangential (non-crossing) contact.
    """

    roots: tuple = ()
    params: tuple = ()
    grazing: tuple = ()

    def __len__(self):
        return len(self.roots)


def _grid(curve, n=SCAN_POINTS):
    if curve.periodic:
        return np.linspace(curve.a, curve.b, n, endpoint=False)
    return np.linspace(curve.a, curve.b, n)


def _edge_derivative(curve, t):
    """Derivative of the unit left normal with respect to ``t``.

    Quotient rule on ``J a'/|a'|`` using only the first two derivatives;
    deliberately avoids the curvature so that lengths computed from it are
    an independent route to the |1 - eps*kappa| length integral.
    """
    d1 = cc.derivative(curve, t, 1)
    d2 = cc.derivative(curve, t, 2)
    v = np.hypot(d1[:, 0], d1[:, 1])
    dot = np.einsum("ij,ij->i", d1, d2)
    du = d2 / v[:, None] - d1 * (dot / v ** 3)[:, None]
    return np.stack([-du[:, 1], du[:, 0]], axis=-1)


def parallel_curve(spec):
    """``t -> base(t) + epsilon * e(t)`` on the base's domain.

    The result may have singular points; it is closed when the base is.
    """
    base, eps = spec.base, spec.epsilon
    if eps == 0.0:
        return base

    def pos(t):
        return cc.evaluate(base, t) + eps * cc.left_normal(base, t)

    def d1(t):
        return cc.derivative(base, t, 1) + eps * _edge_derivative(base, t)

    cls = ClosedCurve if base.periodic else Curve
    kw = dict(d1=d1, name=f"parallel({base.name}, {eps:g})")
    if cls is ClosedCurve:
        kw["closure_tolerance"] = base.closure_tol
    return cls(pos, base.a, base.b, **kw)


def _one_minus(spec, t):
    return 1.0 - spec.epsilon * cc.signed_curvature(spec.base, t)


def offset_speed(spec, s, signed=False):
    """Speed ``|1 - eps*kappa(s)|`` of the offset relative to base arc length.

    With ``signed=True`` the value ``1 - eps*kappa`` is returned instead; its
    sign tells which side of a singularity a point lies on.
    """
    arc = cc.arc_length_param(spec.base)
    t = arc.inverse(s)
    g = _one_minus(spec, np.atleast_1d(t))
    g = g if signed else np.abs(g)
    return g[0] if np.ndim(s) == 0 else g


def _root_params(spec):
    """Parameters where ``1 - eps*kappa`` vanishes, with grazing flags."""
    base = spec.base
    t = _grid(base)
    g = _one_minus(spec, t)
    n = t.size
    if np.mean(np.abs(g) < GRAZING_TOL) > DEGENERATE_FRACTION:
        raise DegenerateOffsetError(
            f"offset at eps={spec.epsilon} is singular on most of the curve")

    def gfun(x):
        return float(_one_minus(spec, np.array([x]))[0])

    xtol = 1e-12 * base.span
    periodic = base.periodic
    last = n if periodic else n - 1

    def nxt(i):
        return (i + 1) % n

    def cell(i):
        lo = t[i]
        hi = t[i + 1] if i + 1 < n else base.b
        return lo, hi

    found = []
    for i in range(n):
        if g[i] == 0.0:
            left = g[i - 1] if (i > 0 or periodic) else None
            right = g[nxt(i)] if (i < n - 1 or periodic) else None
            graze = left is not None and right is not None and left * right > 0
            found.append((t[i], graze))
    for i in range(last):
        j = nxt(i)
        if g[i] * g[j] < 0:
            lo, hi = cell(i)
            found.append((bisect(gfun, lo, hi, xtol=xtol, maxiter=200), False))

    # local minima of |g| without a sign change: refine and look closer
    for i in range(n):
        if not periodic and (i == 0 or i == n - 1):
            continue
        gm, g0, gp = g[i - 1], g[i], g[nxt(i)]
        sgn = np.sign(g0)
        if sgn == 0 or sgn * gm <= 0 or sgn * gp <= 0:
            continue
        if abs(g0) > REFINE_BELOW or not (abs(g0) <= abs(gm) and abs(g0) <= abs(gp)):
            continue
        lo = t[i - 1] if i > 0 else t[-1] - base.span
        hi = t[i + 1] if i + 1 < n else base.b
        res = minimize_scalar(lambda x: sgn * gfun(_wrap(base, x)), bounds=(lo, hi),
                              method="bounded", options={"xatol": xtol})
        x = float(res.x)
        gx = gfun(_wrap(base, x))
        if abs(gx) < GRAZING_TOL:
            found.append((_wrap(base, x), True))
        elif sgn * gx < 0:
            f = lambda y: gfun(_wrap(base, y))
            found.append((_wrap(base, bisect(f, lo, x, xtol=xtol)), False))
            found.append((_wrap(base, bisect(f, x, hi, xtol=xtol)), False))

    tol = 1e-9 * base.span
    if periodic:
        found = [(base.a if x >= base.b - tol else x, gz) for x, gz in found]
    found.sort()
    out = []
    for x, graze in found:
        if out and abs(x - out[-1][0]) <= tol:
            continue
        out.append((x, graze))
    return out


def _wrap(curve, x):
    if curve.periodic:
        return float(curve.a + np.mod(x - curve.a, curve.span))
    return float(min(max(x, curve.a), curve.b))


def find_offset_singularities(spec):
    if spec.epsilon <= 0:
        raise ValueError("singularities need a positive offset distance")
    found = _root_params(spec)
    if not found:
        return SingularitySet()
    params = np.array([x for x, _ in found])
    s = cc.arc_length_param(spec.base).forward(params)
    return SingularitySet(tuple(s.tolist()), tuple(params.tolist()),
                          tuple(bool(gz) for _, gz in found))


def parallel_length(spec, abstol=1e-10, reltol=1e-10):
    """Length of the offset as the integral of ``|1 - eps*kappa|`` ds.

    The integration range is split at every singular point, where the
    integrand has a kink.
    """
    base = spec.base
    cuts = ()
    if spec.epsilon > 0:
        cuts = [x for x, _ in _root_params(spec)]

    def integrand(t):
        return np.abs(_one_minus(spec, t)) * cc.speed(base, t)

    return integrate(integrand, base.a, base.b, abstol, reltol, breakpoints=cuts)


@dataclass(frozen=True)
class ClosedFormLength:
    length: float
    branch: int
    label: str = field(default="")


def parallel_length_closed_form(spec, n=SCAN_POINTS):
    """Offset length from total curvature when one sign pattern holds globally.

    Branch 1 (``eps*kappa <= 1`` everywhere): ``L - eps*K``.
    Branch 2 (``kappa >= 0`` and ``eps*kappa >= 1`` everywhere): ``eps*K - L``.
    """
    base, eps = spec.base, spec.epsilon
    k = cc.signed_curvature(base, np.linspace(base.a, base.b, n + 1))
    tol = GRAZING_TOL
    L = cc.length(base)
    if np.all(eps * k <= 1 + tol):
        K = cc.total_curvature(base) if eps else 0.0
        return ClosedFormLength(L - eps * K, 1, "kappa <= 1/eps")
    if np.all(k >= 0) and np.all(eps * k >= 1 - tol):
        K = cc.total_curvature(base)
        return ClosedFormLength(eps * K - L, 2, "kappa >= 0 and eps >= 1/kappa")
    raise BranchError(
        f"curvature crosses 1/eps={1 / eps:.6g}; neither closed form applies, "
        "use parallel_length")


def offset_curvature(spec, t):
    """Signed curvature of the offset, ``kappa / |1 - eps*kappa|``."""
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    k = cc.signed_curvature(spec.base, t_arr)
    g = 1.0 - spec.epsilon * k
    bad = np.abs(g) < GRAZING_TOL
    if bad.any():
        raise SingularityError(f"offset is singular at t={float(t_arr[np.argmax(bad)])!r}")
    out = k / np.abs(g)
    return out[0] if np.ndim(t) == 0 else out


def check_no_inflection(curve, n=SCAN_POINTS):
    t = _grid(curve, n)
    k = cc.signed_curvature(curve, t)
    bad = np.abs(k) <= KAPPA_FLOOR
    if bad.any():
        tb = float(t[np.argmax(bad)])
        raise InflectionError(f"curvature vanishes near t={tb!r}", t=tb)
    if np.any(np.diff(np.sign(k)) != 0):
        i = int(np.argmax(np.diff(np.sign(k)) != 0))
        tb = float(t[i])
        raise InflectionError(f"curvature changes sign near t={tb!r}", t=tb)


def evolute(curve):
    """Locus of centres of curvature ``a + e/kappa``.

    Degenerates to a point for a circle; has cusps where curvature is
    stationary.
    """
    check_no_inflection(curve)
    h = curve.h1

    def pos(t):
        return cc.evaluate(curve, t) + cc.left_normal(curve, t) / cc.signed_curvature(curve, t)[:, None]

    def dkappa(t):
        if curve.periodic:
            tp = curve.a + np.mod(t + h - curve.a, curve.span)
            tm = curve.a + np.mod(t - h - curve.a, curve.span)
            return (cc.signed_curvature(curve, tp) - cc.signed_curvature(curve, tm)) / (2 * h)
        tp = np.minimum(t + h, curve.b)
        tm = np.maximum(t - h, curve.a)
        return (cc.signed_curvature(curve, tp) - cc.signed_curvature(curve, tm)) / (tp - tm)

    def d1(t):
        k = cc.signed_curvature(curve, t)
        return -(dkappa(t) / k ** 2)[:, None] * cc.left_normal(curve, t)

    cls = ClosedCurve if curve.periodic else Curve
    kw = dict(d1=d1, name=f"evolute({curve.name})")
    if cls is ClosedCurve:
        kw["closure_tolerance"] = max(curve.closure_tol, 1e-8)
    return cls(pos, curve.a, curve.b, **kw)
