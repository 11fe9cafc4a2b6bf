import numpy as np
import pytest

from spinfringe import SlitGeometry


@pytest.fixture
def two_slit():
    """Default desk-scale layout: 2 slits 2 um apart, 500 nm light, 1 m screen."""
    return SlitGeometry.evenly_spaced(2, 2e-6, 500e-9, 1.0)


@pytest.fixture
def three_slit():
    return SlitGeometry.evenly_spaced(3, 2e-6, 500e-9, 1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
