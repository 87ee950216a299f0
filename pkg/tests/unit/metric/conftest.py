"""Contains test fixtures used by the metric unit tests."""

from __future__ import annotations

import pytest

from abflat.catalog import make_flat_parallel, make_randers_klein, make_square_klein
from abflat.metric import ABMetric, PhiFamily, PhiSpec


@pytest.fixture
def randers_klein() -> ABMetric:
    """Returns the pytest fixture for the Funk-type Randers metric on the unit disk."""
    return make_randers_klein(2)


@pytest.fixture
def square_klein() -> ABMetric:
    """Returns the pytest fixture for the square metric on the unit disk."""
    return make_square_klein(2, [0.1, 0.0])


@pytest.fixture
def flat_square() -> ABMetric:
    """Returns the pytest fixture for a square metric built from flat α and parallel β."""
    return make_flat_parallel(2, [0.3, 0.2], PhiSpec(PhiFamily.SQUARE))
