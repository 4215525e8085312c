"""Monte Carlo length estimation with random lines (Cauchy-Crofton).

Lines are drawn uniformly from the kinematic measure ``dp dphi`` restricted to
``phi in [0, pi)`` and ``|p| <= R``, where ``R`` is the circumradius of the
polyline about its vertex centroid.  Every line meeting the polyline is in
that set, and the length is ``pi * R * E[n]`` with ``n`` the crossing count.

Counting uses the fact that, for a fixed direction, the number of times a
closed polyline crosses the level ``p`` of its height function is twice the
number of local maxima above ``p`` minus twice the number of local minima
above ``p``.  A vertex is a local extremum only for directions within its
turning angle, so each line touches about ``total absolute turning / pi``
vertices instead of all of them.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import math
from typing import Optional

import numpy as np

from . import curve_core as cc
from .errors import DegeneracyError, HypothesisError
from .offset import OffsetSpec, parallel_curve

RESOLUTION = 4096
CHUNK = 1 << 17
TANGENCY = 1e-12


@dataclass(frozen=True, eq=False)
class Polyline:
    points: np.ndarray
    closed: bool = False

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 2:
            raise ValueError("polyline needs at least 2 points of shape (n, 2)")
        object.__setattr__(self, "points", pts)

    def segments(self):
        pts = np.vstack([self.points, self.points[:1]]) if self.closed else self.points
        return pts[:-1], pts[1:]

    def length(self):
        p, q = self.segments()
        return float(np.hypot(*(q - p).T).sum())

    def centroid(self):
        return self.points.mean(axis=0)

    def translated(self, shift):
        return Polyline(self.points + np.asarray(shift, dtype=float), self.closed)


def sample_polyline(curve, n=RESOLUTION):
    """``n`` points on the curve; closed curves skip the repeated end point."""
    if curve.periodic:
        t = np.linspace(curve.a, curve.b, n, endpoint=False)
        return Polyline(cc.evaluate(curve, t), closed=True)
    return Polyline(cc.evaluate(curve, np.linspace(curve.a, curve.b, n)), closed=False)


@dataclass(frozen=True)
class Line:
    """The line ``{x : x . (cos phi, sin phi) = p}``."""

    p: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.phi < math.pi:
            raise ValueError("phi must lie in [0, pi)")


def count_intersections(polyline, line, tol=None):
    """Crossings of ``line`` with the polyline's segments.

    Each segment is half-open: a vertex exactly on the line belongs to the
    positive side, so a crossing through a shared vertex is counted once and
    a segment lying along the line contributes nothing.
    """
    p, q = polyline.segments()
    u = np.array([math.cos(line.phi), math.sin(line.phi)])
    if tol is None:
        tol = TANGENCY * float(np.abs(polyline.points).max())
    dp = p @ u - line.p
    dq = q @ u - line.p
    return int(np.count_nonzero((dp >= -tol) != (dq >= -tol)))


@dataclass(frozen=True)
class CroftonEstimate:
    mean: float
    std_error: float
    n_lines: int
    seed: int
    bounding_radius: float
    centroid: tuple = (0.0, 0.0)
    caveat: Optional[str] = None


class _ExtremaIndex:
    """Per-vertex direction intervals where the vertex is a local extremum."""

    def __init__(self, vertices, closed, tol):
        v = vertices
        if not closed:
            v = np.vstack([v, v[-2:0:-1]])
        d = np.roll(v, -1, axis=0) - v
        keep = np.any(d != 0, axis=1)
        v = v[keep]
        d = np.roll(v, -1, axis=0) - v
        self.v = v
        self.tol = tol
        self.mult = 2 if closed else 1
        psi = np.arctan2(d[:, 1], d[:, 0])
        f = np.mod(psi + np.pi / 2, np.pi)
        # sign of d.u(phi) for phi > f (for phi < f it is the opposite)
        after = np.where(-d[:, 0] * np.sin(f) + d[:, 1] * np.cos(f) > 0, 1, -1)
        f_in, a_in = np.roll(f, 1), np.roll(after, 1)
        lo, hi = np.minimum(f_in, f), np.maximum(f_in, f)
        same = a_in * after > 0
        # same sign pattern: extremal on (lo, hi); otherwise on [0, lo) and (hi, pi)
        iv = np.concatenate([np.flatnonzero(same), np.flatnonzero(~same), np.flatnonzero(~same)])
        self.lo = np.concatenate([lo[same], np.zeros((~same).sum()), hi[~same]])
        self.hi = np.concatenate([hi[same], lo[~same], np.full((~same).sum(), np.pi)])
        # whether the vertex is a maximum is constant on each interval
        mid = 0.5 * (self.lo + self.hi)
        rising = a_in[iv] * np.where(mid > f_in[iv], 1, -1) > 0
        self.weight = np.where(rising, 1.0, -1.0)
        self.x, self.y = v[iv, 0], v[iv, 1]

    def count_sum(self, phi, p):
        """Total crossings over lines whose sorted directions are ``phi``.

        ``phi`` must be ascending.  Only sums are returned, so the pairing of
        ``phi[j]`` with ``p[j]`` does not need to follow the draw order.
        """
        j0 = np.searchsorted(phi, self.lo, side="right")
        j1 = np.searchsorted(phi, self.hi, side="left")
        c = np.maximum(j1 - j0, 0)
        total = int(c.sum())
        if total == 0:
            return np.zeros(phi.size, dtype=np.int64)
        starts = np.cumsum(c) - c
        li = np.arange(total) - np.repeat(starts - j0, c)
        d = np.repeat(self.x, c) * np.cos(phi)[li] + np.repeat(self.y, c) * np.sin(phi)[li]
        d -= p[li]
        w = np.where(d >= -self.tol, np.repeat(self.weight, c), 0.0)
        return np.bincount(li, weights=w, minlength=phi.size).astype(np.int64) * self.mult

    def counts(self, phi, p):
        """Crossing counts for lines ``(p[j], phi[j])`` in centroid coordinates."""
        order = np.argsort(phi, kind="stable")
        out = np.empty(phi.size, dtype=np.int64)
        out[order] = self.count_sum(phi[order], p[order])
        return out


def _chunk_sums(index, seed, k, size, radius):
    gen = np.random.Generator(np.random.Philox(seed).jumped(k))
    phi = gen.random(size) * np.pi
    p = (2.0 * gen.random(size) - 1.0) * radius
    # p is independent of phi, so sorting phi alone leaves the pairs iid
    phi.sort()
    n = index.count_sum(phi, p)
    return int(n.sum()), int((n * n).sum())


def crofton_length(polyline, n_lines, seed, workers=None):
    """Estimate the polyline length from ``n_lines`` random lines.

    The result depends only on ``(polyline, n_lines, seed)``: lines are drawn
    in fixed-size chunks, chunk ``k`` from a Philox stream jumped ``k`` times,
    and per-chunk integer sums are combined in order.
    """
    n_lines = int(n_lines)
    if n_lines < 1:
        raise ValueError("n_lines must be >= 1")
    centroid = polyline.centroid()
    rel = polyline.points - centroid
    radius = float(np.hypot(rel[:, 0], rel[:, 1]).max())
    if radius == 0.0:
        raise DegeneracyError("polyline collapses to a single point")
    index = _ExtremaIndex(rel, polyline.closed, TANGENCY * radius)

    sizes = [min(CHUNK, n_lines - k * CHUNK) for k in range((n_lines + CHUNK - 1) // CHUNK)]
    jobs = [(index, seed, k, size, radius) for k, size in enumerate(sizes)]
    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            sums = list(pool.map(lambda a: _chunk_sums(*a), jobs))
    else:
        sums = [_chunk_sums(*a) for a in jobs]
    s1 = sum(s for s, _ in sums)
    s2 = sum(s for _, s in sums)

    scale = math.pi * radius
    mean = scale * s1 / n_lines
    if n_lines > 1:
        var = (n_lines * s2 - s1 * s1) / (n_lines * (n_lines - 1))
        std_error = scale * math.sqrt(var / n_lines)
    else:
        std_error = 0.0

    caveat = None
    p, q = polyline.segments()
    longest = float(np.hypot(*(q - p).T).max())
    if longest > radius / 100:
        caveat = (f"longest segment {longest:.3g} exceeds R/100 = {radius / 100:.3g}; "
                  "polyline resolution error is not included in std_error")
    return CroftonEstimate(mean, std_error, n_lines, int(seed), radius,
                           tuple(centroid.tolist()), caveat)


@dataclass(frozen=True)
class RotationIndexEstimate:
    raw: float
    rounded: int
    margin: float
    epsilon: float
    length_alpha: CroftonEstimate
    length_beta: CroftonEstimate


def substream_seed(seed, stream):
    """Independent integer seed for sub-stream ``stream`` of ``seed``."""
    return int(np.random.SeedSequence([int(seed), int(stream)]).generate_state(1, np.uint64)[0])


def estimate_rotation_index(curve, epsilon, n_lines, seed, resolution=RESOLUTION, workers=None):
    """Rotation index from Crofton estimates of the curve and its offset.

    Uses ``(L(alpha) - L(beta)) / (2*pi*eps)``, which is the rotation index
    when ``eps`` is below the smallest left-turn radius of curvature.
    """
    from .theorems import _check_epsilon

    epsilon = float(epsilon)
    if epsilon <= 0:
        raise HypothesisError("rotation index estimate needs eps > 0")
    _check_epsilon(curve, epsilon)
    beta = parallel_curve(OffsetSpec(curve, epsilon))
    la = crofton_length(sample_polyline(curve, resolution), n_lines,
                        substream_seed(seed, 1), workers)
    lb = crofton_length(sample_polyline(beta, resolution), n_lines,
                        substream_seed(seed, 2), workers)
    raw = (la.mean - lb.mean) / (2 * math.pi * epsilon)
    rounded = int(round(raw))
    return RotationIndexEstimate(raw, rounded, abs(raw - rounded), epsilon, la, lb)
