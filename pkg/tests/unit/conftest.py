"""Contains test fixtures shared by the abflat unit tests."""

from __future__ import annotations

from pathlib import Path

import pytest

from abflat.harness import SuiteConfig


@pytest.fixture
def flat_parallel_config() -> SuiteConfig:
    """Returns the pytest fixture for a small flat-parallel suite configuration."""
    return SuiteConfig("flat-parallel", dim=2, samples=5, seed=3)


@pytest.fixture(scope="module")
def configs_directory(test_assets_directory: Path) -> Path:
    """Returns the test assets directory containing suite configurations."""
    return test_assets_directory / "unit" / "harness" / "configs"


@pytest.fixture(scope="module")
def test_assets_directory() -> Path:
    """Returns the test assets directory."""
    return Path(__file__).parent.parent / "assets"
