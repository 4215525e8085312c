import numpy as np
import pytest

from parcurve import catalog


@pytest.fixture
def circle2():
    return catalog.circle(2.0)


@pytest.fixture
def ellipse21():
    return catalog.ellipse(2.0, 1.0)


@pytest.fixture
def limacon21():
    return catalog.limacon(2.0, 1.0)


@pytest.fixture
def figure8():
    return catalog.figure_eight()


CLOSED_CATALOG = {
    "circle": lambda: catalog.circle(2.0),
    "ellipse": lambda: catalog.ellipse(2.0, 1.0),
    "limacon": lambda: catalog.limacon(2.0, 1.0),
    "figure_eight": catalog.figure_eight,
}


@pytest.fixture(params=sorted(CLOSED_CATALOG))
def closed_curve(request):
    return CLOSED_CATALOG[request.param]()


def chord_length(curve, n):
    """Brute-force polyline length at ``n`` samples."""
    pts = curve.position(np.linspace(curve.a, curve.b, n + 1))
    return float(np.hypot(*np.diff(pts, axis=0).T).sum())
