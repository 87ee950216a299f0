"""Acceptance test utility functions."""

from collections.abc import Mapping
from typing import Any

from abflat.harness import SuiteConfig, SuiteReport, run_suite

DIMENSIONS = (2, 3)
SEEDS = (1, 2, 3)
SAMPLES = 200


def run_suite_at_full_size(
    suite: str, dim: int, seed: int, params: Mapping[str, Any] | None = None
) -> SuiteReport:
    """Run a suite with the acceptance sample count and return its report."""
    return run_suite(SuiteConfig(suite, dim=dim, samples=SAMPLES, seed=seed, params=params))


def failed_checks(report: SuiteReport) -> list[str]:
    """Return a description of every check of a report that did not pass."""
    return [str(check) for check in report.checks if not check.passed]


def check_result(report: SuiteReport, name: str) -> float:
    """Return the largest value a check of a report recorded."""
    for check in report.checks:
        if check.name == name:
            return check.max_residual
    raise KeyError(f"{report.suite} has no check named {name!r}.")
