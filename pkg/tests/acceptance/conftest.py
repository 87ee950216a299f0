"""Contains test fixtures used by the verification suite acceptance tests."""

import pytest

from tests.acceptance._utils import DIMENSIONS, SEEDS


@pytest.fixture(params=DIMENSIONS, ids=lambda n: f"n{n}")
def dim(request: pytest.FixtureRequest) -> int:
    """Returns the pytest fixture for the dimensions every suite runs in."""
    return int(request.param)


@pytest.fixture(params=SEEDS, ids=lambda seed: f"seed{seed}")
def seed(request: pytest.FixtureRequest) -> int:
    """Returns the pytest fixture for the seeds every suite runs with."""
    return int(request.param)
