"""Contains test fixtures used by the riemann unit tests."""

from __future__ import annotations

import pytest

from abflat.catalog import klein_metric
from abflat.riemann import RiemannData


@pytest.fixture
def klein() -> RiemannData:
    """Returns the pytest fixture for the Klein metric of the unit disk with a zero 1-form."""
    return RiemannData(2, klein_metric, lambda x: [0.0, 0.0], name="klein")


@pytest.fixture
def flat_rotation() -> RiemannData:
    """Returns the pytest fixture for the Euclidean plane with the rotation 1-form."""
    return RiemannData(
        2, lambda x: [[1.0, 0.0], [0.0, 1.0]], lambda x: [x[1], -x[0]], name="flat-rotation"
    )
