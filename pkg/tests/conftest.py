import numpy as np
import pytest

from lpstab.measure import MeasureSpace


@pytest.fixture
def half():
    return MeasureSpace([0.5, 0.5])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
