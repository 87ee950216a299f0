"""Contains test fixtures used by the conditions unit tests."""

from __future__ import annotations

from collections.abc import Sequence

import pytest

from abflat.catalog import EtaField, make_flat_parallel, make_third_class_eta
from abflat.metric import ABMetric, PhiFamily, PhiSpec
from abflat.riemann import RiemannData

Sample = tuple[Sequence[float], Sequence[float]]


@pytest.fixture
def samples() -> list[Sample]:
    """Returns the pytest fixture for planar samples with a positive β on the test data."""
    return [
        ([0.1, 0.2], [0.4, 0.9]),
        ([-0.3, 0.4], [0.6, -0.5]),
        ([0.5, -0.1], [0.9, 0.2]),
    ]


@pytest.fixture
def flat_geom() -> RiemannData:
    """Returns the pytest fixture for Euclidean data with a constant 1-form."""
    return make_flat_parallel(2, [0.5, 0.0], PhiSpec(PhiFamily.RANDERS)).geom


@pytest.fixture
def rotation_geom() -> RiemannData:
    """Returns the pytest fixture for Euclidean data with the rotation 1-form."""
    return RiemannData(
        2, lambda x: [[1.0, 0.0], [0.0, 1.0]], lambda x: [1.0 + x[1], -x[0]], name="rotation"
    )


@pytest.fixture
def eta() -> EtaField:
    """Returns the pytest fixture for the default η-field."""
    return EtaField(amplitude=0.3, frequency=1.0)


@pytest.fixture
def eta_metric(eta: EtaField) -> ABMetric:
    """Returns the pytest fixture for the η-deformed third-class metric with m = 2."""
    return make_third_class_eta(2, 2.0, 0.0, eta)
