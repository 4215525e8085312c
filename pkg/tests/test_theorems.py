import json
import math

import numpy as np
import pytest

from parcurve import catalog
from parcurve import curve_core as cc
from parcurve.errors import DomainError, HypothesisError, SimplicityError
from parcurve.theorems import (is_simple, max_safe_epsilon, self_intersection,
                               verify_corollary5, verify_proposition4, verify_theorem1)

from conftest import CLOSED_CATALOG


def test_max_safe_epsilon_examples(circle2, ellipse21, limacon21):
    assert max_safe_epsilon(circle2) == pytest.approx(2.0, abs=1e-12)
    assert max_safe_epsilon(ellipse21) == pytest.approx(0.5, abs=1e-12)
    assert max_safe_epsilon(catalog.circle(2.0, "cw")) == math.inf
    # limacon (2 + cos t)... curvature peaks at t = 0 with value 3
    assert max_safe_epsilon(limacon21) == pytest.approx(1 / 3, abs=1e-10)


def test_max_safe_epsilon_needs_closed_curve():
    with pytest.raises(DomainError):
        max_safe_epsilon(catalog.half_circle(1.0))


# -- length identity ------------------------------------------------------------

def test_length_identity_examples(circle2, limacon21):
    r = verify_theorem1(circle2, 0.5)
    assert r.passed and abs(r.residual) < 1e-8
    assert r.quantities["difference"] == pytest.approx(math.pi, abs=1e-10)
    r = verify_theorem1(limacon21, 0.05)
    assert r.passed and abs(r.residual) < 1e-7
    assert r.quantities["omega"] == 2
    assert r.quantities["difference"] == pytest.approx(0.2 * math.pi, abs=1e-7)
    assert verify_theorem1(limacon21, 0.0).residual == 0.0


@pytest.mark.parametrize("name", sorted(CLOSED_CATALOG))
@pytest.mark.parametrize("fraction", [0.0, 0.1, 0.5, 0.9])
def test_length_identity_grid(name, fraction):
    curve = CLOSED_CATALOG[name]()
    r = verify_theorem1(curve, fraction * max_safe_epsilon(curve))
    assert abs(r.residual) < 1e-7
    assert r.passed


def test_length_identity_rejects_unsafe_epsilon(ellipse21):
    with pytest.raises(HypothesisError):
        verify_theorem1(ellipse21, 0.498)
    verify_theorem1(ellipse21, 0.494)


def test_length_identity_on_right_turning_curve():
    cw = catalog.ellipse(2.0, 1.0, "cw")
    r = verify_theorem1(cw, 3.0)  # no left turns, every eps is safe
    assert r.quantities["omega"] == -1
    assert abs(r.residual) < 1e-7


def test_regular_homotopy_constancy():
    diffs = []
    for u in np.linspace(0, 1, 11):
        r = verify_theorem1(catalog.ellipse(2.0, 2.0 - u), 0.1)
        diffs.append(r.quantities["difference"])
    assert np.max(np.abs(np.array(diffs) - 0.2 * math.pi)) < 1e-6


@pytest.mark.parametrize("lam", [0.25, 3.0, 40.0])
def test_scale_covariance(ellipse21, lam):
    big = cc.transformed(ellipse21, lam * np.eye(2))
    d0 = verify_theorem1(ellipse21, 0.2).quantities["difference"]
    d1 = verify_theorem1(big, 0.2 * lam).quantities["difference"]
    assert abs(d1 - lam * d0) < 1e-8


def test_report_serializes(circle2):
    r = verify_theorem1(circle2, 0.5)
    d = json.loads(json.dumps(r.to_dict()))
    assert d["name"] == "theorem1" and d["passed"] is True
    assert set(d["quantities"]) >= {"L_alpha", "L_beta", "two_pi_eps_omega", "residual"}
    assert r.passed == (abs(r.residual) <= r.tolerance)


# -- total curvature ------------------------------------------------------------

def test_total_curvature_examples(circle2, figure8, limacon21):
    r = verify_proposition4(circle2)
    assert r.passed and abs(r.residual) < 1e-9 and r.quantities["omega"] == 1
    r = verify_proposition4(figure8)
    assert r.passed and r.quantities["omega"] == 0 and abs(r.quantities["K"]) < 1e-7
    r = verify_proposition4(limacon21)
    assert r.passed and r.quantities["omega"] == 2
    assert r.quantities["K"] == pytest.approx(4 * math.pi, abs=1e-7)


def test_total_curvature_reversed(closed_curve):
    r = verify_proposition4(cc.reversed_curve(closed_curve))
    assert r.passed and r.quantities["omega"] == -cc.rotation_index(closed_curve)


# -- simple curves --------------------------------------------------------------

def test_self_intersection_oracle():
    square = np.array([[0, 0], [1, 0], [1, 1], [0, 1]], float)
    assert self_intersection(square) is None
    bowtie = np.array([[0, 0], [1, 1], [1, 0], [0, 1]], float)
    assert self_intersection(bowtie) is not None
    # open polyline: the closing segment does not exist
    assert self_intersection(bowtie[[0, 2, 1, 3]], closed=False) is None


def test_simplicity_of_catalog(circle2, ellipse21, limacon21, figure8):
    assert is_simple(circle2) and is_simple(ellipse21)
    assert not is_simple(limacon21) and not is_simple(figure8)


def test_simple_curve_examples(circle2):
    r = verify_corollary5(circle2, 0.5)
    assert r.passed and r.quantities["sign"] == -1
    assert r.quantities["change"] == pytest.approx(-math.pi, abs=1e-10)
    r = verify_corollary5(catalog.circle(2.0, "cw"), 0.5)
    assert r.passed and r.quantities["sign"] == 1
    assert r.quantities["change"] == pytest.approx(math.pi, abs=1e-10)


def test_cable_around_the_earth():
    """Raising a cable by 1 around a clockwise circle adds 2 pi, whatever the radius."""
    for R in (1.0, 6.371e6):
        r = verify_corollary5(catalog.circle(R, "cw"), 1.0)
        assert r.passed
        # the difference of two lengths ~ 4e7 keeps about eight digits
        assert r.quantities["change"] == pytest.approx(2 * math.pi, abs=1e-14 * 2 * math.pi * R + 1e-12)


def test_simple_curve_rejects_limacon(limacon21):
    with pytest.raises(SimplicityError):
        verify_corollary5(limacon21, 0.01)


@pytest.mark.parametrize("orientation", ["ccw", "cw"])
def test_simple_curve_sign_is_minus_omega(orientation):
    curve = catalog.ellipse(2.0, 1.0, orientation)
    r = verify_corollary5(curve, 0.3)
    assert r.passed
    assert r.quantities["sign"] == -r.quantities["omega"]
