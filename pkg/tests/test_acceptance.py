"""Acceptance criteria, one test each, with a PASS/FAIL line per criterion.

Run alone with ``pytest tests/test_acceptance.py -v`` (the lines are printed
even when output capture is on).  ``-m "not slow"`` skips the full 100-seed
rotation-index run and keeps its 10-seed smoke variant.
"""
import math
import time

import numpy as np
import pytest

from parcurve import catalog
from parcurve import curve_core as cc
from parcurve.crofton import crofton_length, estimate_rotation_index, sample_polyline
from parcurve.offset import (OffsetSpec, evolute, offset_curvature, parallel_curve,
                             parallel_length, parallel_length_closed_form)
from parcurve.theorems import max_safe_epsilon, verify_proposition4, verify_theorem1

from conftest import CLOSED_CATALOG

CLOSED = sorted(CLOSED_CATALOG)


@pytest.fixture
def report(capsys):
    def emit(label, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        return ok
    return emit


def test_c01_length_difference_identity(report):
    start = time.perf_counter()
    worst = 0.0
    ok = True
    for name in CLOSED:
        curve = CLOSED_CATALOG[name]()
        safe = max_safe_epsilon(curve)
        for frac in (0.1, 0.5, 0.9):
            r = verify_theorem1(curve, frac * safe)
            rel = abs(r.residual) / curve.diagonal
            worst = max(worst, rel)
            ok &= abs(r.residual) < 1e-7 * curve.diagonal
    elapsed = time.perf_counter() - start
    ok &= elapsed < 10
    assert report("1 length difference identity", ok,
                  f"max |residual|/diag = {worst:.2e} (< 1e-7), {elapsed:.1f} s (< 10 s)")


def test_c02_half_circle_example(report):
    spec = OffsetSpec(catalog.half_circle(3.0), 4.0)
    L = parallel_length(spec)
    closed = parallel_length_closed_form(spec)
    ok = (abs(L - math.pi) < 1e-8 and closed.branch == 2
          and abs(closed.length - math.pi) < 1e-8)
    assert report("2 half-circle offset length", ok,
                  f"integral {L!r}, closed form branch {closed.branch} {closed.length!r}, target pi")


def test_c03_total_curvature(report):
    parts, ok = [], True
    for name in CLOSED:
        r = verify_proposition4(CLOSED_CATALOG[name]())
        q = r.quantities
        ok &= abs(q["K"] - 2 * math.pi * q["omega"]) < 1e-7
        parts.append(f"{name} w={q['omega']} |K-2pi w|={abs(r.residual):.1e}")
    assert report("3 total curvature = 2 pi omega", ok, "; ".join(parts))


def test_c04_two_route_length(report):
    pairs = [(name, eps) for name in CLOSED for eps in (0.05, 0.2, 0.45, 0.6, 1.1)]
    assert ("ellipse", 0.6) in pairs and len(pairs) == 20
    worst, ok = 0.0, True
    for name, eps in pairs:
        spec = OffsetSpec(CLOSED_CATALOG[name](), eps)
        d = abs(parallel_length(spec) - cc.length(parallel_curve(spec)))
        worst = max(worst, d)
        ok &= d < 1e-7
    assert report("4 two-route offset length", ok, f"20 pairs, max difference {worst:.2e} (< 1e-7)")


def test_c05_offset_curvature(report):
    worst, probes, ok = 0.0, 0, True
    for name in CLOSED:
        curve = CLOSED_CATALOG[name]()
        for eps in (0.3, 0.6):
            spec = OffsetSpec(curve, eps)
            t = curve.a + (np.arange(100) + 0.5) / 100 * curve.span
            t = t[np.abs(1 - eps * cc.signed_curvature(curve, t)) > 1e-3]
            d = np.abs(offset_curvature(spec, t) - cc.signed_curvature(parallel_curve(spec), t))
            worst = max(worst, float(d.max()))
            probes += t.size
            ok &= bool(np.all(d < 1e-5))
    assert report("5 offset curvature formula", ok,
                  f"{probes} probes, max deviation {worst:.2e} (< 1e-5)")


def test_c06_evolute_sharing(report):
    alpha = catalog.ellipse(2.0, 1.0)
    beta = parallel_curve(OffsetSpec(alpha, 0.3))
    t = np.linspace(alpha.a, alpha.b, 1000, endpoint=False)
    d = float(np.max(np.hypot(*(evolute(alpha).position(t) - evolute(beta).position(t)).T)))
    assert report("6 evolute shared by parallel", d < 1e-5, f"max distance {d:.2e} (< 1e-5)")


def test_c07_crofton_estimator(report):
    start = time.perf_counter()
    poly = sample_polyline(catalog.circle(1.0))
    single = crofton_length(poly, 10 ** 6, seed=2024)
    rel = abs(single.mean - 2 * math.pi) / (2 * math.pi)

    sizes = [10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6]
    errors = [float(np.mean([abs(crofton_length(poly, n, seed=s).mean - 2 * math.pi)
                             for s in range(30)])) for n in sizes]
    with np.errstate(divide="ignore", invalid="ignore"):
        logs = np.log(errors)
        slope = np.polyfit(np.log(sizes), logs, 1)[0] if np.all(np.isfinite(logs)) else math.nan
    elapsed = time.perf_counter() - start
    ok = rel < 0.01 and abs(slope + 0.5) <= 0.15 and elapsed < 60
    errs = ", ".join(f"{e:.2e}" for e in errors)
    assert report("7 Crofton length estimator", ok,
                  f"rel error {rel:.2e} (< 0.01); mean |error| by N {errs}; "
                  f"slope {slope:.3f} (-0.5 +/- 0.15); {elapsed:.1f} s (< 60 s)")


def _rotation_index_run(seeds):
    circle = catalog.circle(2.0)
    limacon = catalog.limacon(2.0, 1.0)
    eps_l = 0.5 * max_safe_epsilon(limacon)
    c = sum(estimate_rotation_index(circle, 0.5, 4 * 10 ** 6, seed=s).rounded == 1 for s in seeds)
    l = sum(estimate_rotation_index(limacon, eps_l, 4 * 10 ** 6, seed=s).rounded == 2 for s in seeds)
    return c, l


def test_c08_rotation_index_smoke(report):
    start = time.perf_counter()
    c, l = _rotation_index_run(range(10))
    elapsed = time.perf_counter() - start
    ok = c >= 9.5 and l >= 9.5 and elapsed < 60
    assert report("8 rotation index estimate (10-seed smoke)", ok,
                  f"circle {c}/10 -> 1, limacon {l}/10 -> 2 (>= 95%), {elapsed:.1f} s (< 60 s)")


@pytest.mark.slow
def test_c08_rotation_index_full(report):
    start = time.perf_counter()
    c, l = _rotation_index_run(range(100))
    elapsed = time.perf_counter() - start
    ok = c >= 95 and l >= 95 and elapsed < 600
    assert report("8 rotation index estimate (100 seeds)", ok,
                  f"circle {c}/100 -> 1, limacon {l}/100 -> 2 (>= 95), {elapsed:.1f} s (< 600 s)")


def test_c09_regular_homotopy(report):
    diffs = np.array([verify_theorem1(catalog.ellipse(2.0, 2.0 - u), 0.1).quantities["difference"]
                      for u in np.linspace(0, 1, 11)])
    spread = float(diffs.max() - diffs.min())
    off = float(np.max(np.abs(diffs - 0.2 * math.pi)))
    ok = spread < 1e-6 and off < 1e-6
    assert report("9 regular homotopy constancy", ok,
                  f"spread {spread:.2e}, max |diff - 2 pi eps| {off:.2e} (< 1e-6)")


def test_c10_property_suites(report):
    checks = {}
    rng = np.random.default_rng(10)
    for name in CLOSED:
        curve = CLOSED_CATALOG[name]()
        a, w = curve.a, curve.span
        other = cc.reparametrized(
            curve, lambda u: a + w * (u + 0.1 * np.sin(2 * np.pi * u)), 0.0, 1.0,
            lambda u: w * (1 + 0.2 * np.pi * np.cos(2 * np.pi * u)),
            lambda u: -w * 0.4 * np.pi ** 2 * np.sin(2 * np.pi * u))
        checks.setdefault("reparametrization", []).append(
            abs(cc.length(other) - cc.length(curve)) < 1e-8
            and abs(cc.total_curvature(other) - cc.total_curvature(curve)) < 1e-8
            and cc.rotation_index(other) == cc.rotation_index(curve))

        th = rng.uniform(-np.pi, np.pi)
        rot = np.array([[np.cos(th), -np.sin(th)], [np.sin(th), np.cos(th)]])
        moved = cc.transformed(curve, rot, rng.uniform(-10, 10, 2))
        mirror = cc.transformed(curve, np.diag([1.0, -1.0]))
        t = np.linspace(curve.a, curve.b, 50)
        k = cc.signed_curvature(curve, t)
        checks.setdefault("rigid motion", []).append(
            abs(cc.length(moved) - cc.length(curve)) < 1e-10
            and np.max(np.abs(cc.signed_curvature(moved, t) - k)) < 1e-10
            and abs(cc.total_curvature(moved) - cc.total_curvature(curve)) < 1e-10
            and cc.rotation_index(moved) == cc.rotation_index(curve))
        checks.setdefault("reflection", []).append(
            np.max(np.abs(cc.signed_curvature(mirror, t) + k)) < 1e-10
            and abs(cc.total_curvature(mirror) + cc.total_curvature(curve)) < 1e-10
            and cc.rotation_index(mirror) == -cc.rotation_index(curve))

        rev = cc.reversed_curve(curve)
        checks.setdefault("orientation reversal", []).append(
            np.max(np.abs(cc.signed_curvature(rev, curve.a + curve.b - t) + k)) < 1e-12
            and cc.rotation_index(rev) == -cc.rotation_index(curve))

        arc = cc.arc_length_param(curve)
        s = np.linspace(0.01, arc.total - 0.01, 100)
        h = 1e-5
        de = (cc.left_normal(curve, arc.inverse(s + h)) - cc.left_normal(curve, arc.inverse(s - h))) / (2 * h)
        ts = arc.inverse(s)
        frenet = -cc.signed_curvature(curve, ts)[:, None] * cc.unit_tangent(curve, ts)
        checks.setdefault("Frenet de/ds = -k t", []).append(np.max(np.abs(de - frenet)) < 1e-5)

        u = rng.uniform(curve.a, curve.b, 1000)
        checks.setdefault("arc-length round trip", []).append(
            np.max(np.abs(arc.inverse(arc.forward(u)) - u)) < 1e-9)

    ok = all(all(v) for v in checks.values())
    detail = "; ".join(f"{k} {sum(v)}/{len(v)}" for k, v in checks.items())
    assert report("10 property suites", ok, detail)
