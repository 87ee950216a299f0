"""Acceptance tests for the Klein-ball Randers and square suites."""

import pytest

from tests.acceptance._utils import check_result, failed_checks, run_suite_at_full_size

pytestmark = pytest.mark.slow


@pytest.mark.parametrize("shifted", [False, True], ids=["a0", "a0.1"])
@pytest.mark.parametrize("sign", [1, -1])
def test___randers_klein___full_size___has_curvature_minus_quarter(
    dim: int, seed: int, shifted: bool, sign: int
) -> None:
    a_vec = [0.1 if shifted else 0.0] + [0.0] * (dim - 1)

    report = run_suite_at_full_size("randers-klein", dim, seed, {"a_vec": a_vec, "sign": sign})

    assert report.passed, failed_checks(report)
    assert check_result(report, "flag-curvature") < 1e-5
    assert check_result(report, "projective-flatness") < 1e-8
    assert check_result(report, "route-equivalence") < 1e-7


def test___square_klein___full_size___has_zero_curvature(dim: int, seed: int) -> None:
    report = run_suite_at_full_size("square-klein", dim, seed)

    assert report.passed, failed_checks(report)
    assert check_result(report, "flag-curvature") < 1e-5
    assert check_result(report, "projective-flatness") < 1e-8


def test___flat_parallel___full_size___is_locally_minkowskian(dim: int, seed: int) -> None:
    report = run_suite_at_full_size("flat-parallel", dim, seed, {"phi": "square"})

    assert report.passed, failed_checks(report)
