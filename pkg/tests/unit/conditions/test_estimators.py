"""Tests for the estimators of the auxiliary fields ρ, τ and μ."""

from __future__ import annotations

from collections.abc import Sequence

import pytest
from numpy.testing import assert_allclose

from abflat.catalog import EtaField, eta_family_parameters
from abflat.conditions import (
    check_case_iii,
    estimate_condition_params,
    estimate_mu,
    estimate_rho,
    estimate_tau,
)
from abflat.metric import ABMetric
from abflat.riemann import RiemannData

Sample = tuple[Sequence[float], Sequence[float]]


@pytest.mark.parametrize("x", [[0.1, 0.2], [-0.4, 0.3], [0.7, -0.6]])
def test___eta_family___estimate_tau___matches_closed_form(
    eta: EtaField, eta_metric: ABMetric, x: list[float]
) -> None:
    expected = eta_family_parameters(eta, 2.0).tau(x)

    assert estimate_tau(eta_metric.geom, x, 0.0) == pytest.approx(expected, abs=1e-10)


@pytest.mark.parametrize("x", [[0.1, 0.2], [-0.4, 0.3]])
def test___eta_family___estimate_rho___matches_closed_form(
    eta: EtaField, eta_metric: ABMetric, x: list[float]
) -> None:
    params = eta_family_parameters(eta, 2.0)
    tau = float(params.tau(x))

    rho = estimate_rho(eta_metric.geom, x, "iii", tau=tau, m=2.0)

    assert_allclose(rho, [float(ri) for ri in params.rho(x)], atol=1e-10)


def test___flat_parallel_data___estimates___vanish(flat_geom: RiemannData) -> None:
    x = [0.3, -0.2]

    assert estimate_mu(flat_geom, x, 0.5) == pytest.approx(0.0, abs=1e-12)
    assert estimate_tau(flat_geom, x, 0.5) == pytest.approx(0.0, abs=1e-12)
    assert_allclose(estimate_rho(flat_geom, x, "i"), [0.0, 0.0], atol=1e-12)


def test___eta_family___estimated_params___pass_third_class_check(
    eta_metric: ABMetric, samples: list[Sample]
) -> None:
    params = estimate_condition_params(eta_metric.geom, "iii", m=2.0)

    residuals = check_case_iii(eta_metric.geom, 2.0, 0.0, params, samples, 1e-7)

    assert residuals.passed, str(residuals)


def test___first_class___estimate_condition_params___provides_mu(
    flat_geom: RiemannData,
) -> None:
    params = estimate_condition_params(flat_geom, "i", k=0.2)

    assert params.mu is not None
    assert params.mu([0.0, 0.0]) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("case", ["ii", "iii", "iv", "v"])
def test___other_cases___estimate_condition_params___omit_mu(
    flat_geom: RiemannData, case: str
) -> None:
    params = estimate_condition_params(flat_geom, case)

    assert params.mu is None


def test___fourth_class___estimate_condition_params___uses_zero_tau(
    eta_metric: ABMetric,
) -> None:
    params = estimate_condition_params(eta_metric.geom, "iv", m=2.0)

    assert params.tau([0.1, 0.2]) == 0.0


def test___unknown_case___estimate_condition_params___raises_value_error(
    flat_geom: RiemannData,
) -> None:
    with pytest.raises(ValueError, match="Unknown case"):
        estimate_condition_params(flat_geom, "vi")


def test___unknown_case___estimate_rho___raises_value_error(flat_geom: RiemannData) -> None:
    with pytest.raises(ValueError, match="Unknown case"):
        estimate_rho(flat_geom, [0.0, 0.0], "vi")
