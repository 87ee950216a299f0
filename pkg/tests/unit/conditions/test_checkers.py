"""Tests for the flat-parallel and classification case checkers."""

from __future__ import annotations

from collections.abc import Sequence

import pytest

from abflat._errors import CaseReductionError, DimensionError
from abflat.catalog import EtaField, eta_family_parameters, make_flat_parallel
from abflat.conditions import (
    ConditionParams,
    check_case_i,
    check_case_ii,
    check_case_iii,
    check_case_iv,
    check_case_v,
    check_flat_parallel,
)
from abflat.metric import ABMetric, PhiFamily, PhiSpec
from abflat.riemann import RiemannData

Sample = tuple[Sequence[float], Sequence[float]]


def test___flat_parallel_data___check_flat_parallel___passes(
    flat_geom: RiemannData, samples: list[Sample]
) -> None:
    residuals = check_flat_parallel(flat_geom, samples)

    assert residuals.passed
    assert set(residuals.residuals) == {
        "symmetric-derivative",
        "antisymmetric-derivative",
        "riemann-curvature",
    }
    assert residuals.worst == pytest.approx(0.0, abs=1e-12)


def test___rotation_one_form___check_flat_parallel___detects_non_parallel_beta(
    rotation_geom: RiemannData, samples: list[Sample]
) -> None:
    residuals = check_flat_parallel(rotation_geom, samples)

    assert not residuals.passed
    assert residuals.residuals["antisymmetric-derivative"] == pytest.approx(1.0)
    assert residuals.residuals["symmetric-derivative"] == pytest.approx(0.0, abs=1e-12)
    assert residuals.residuals["riemann-curvature"] == pytest.approx(0.0, abs=1e-12)


def test___eta_family_data___check_flat_parallel___detects_non_flat_alpha(
    eta_metric: ABMetric, samples: list[Sample]
) -> None:
    residuals = check_flat_parallel(eta_metric.geom, samples)

    assert not residuals.passed
    assert "riemann-curvature" in residuals.failures


@pytest.mark.parametrize("k", [0.0, 0.4, -1.0])
def test___flat_parallel_data___check_case_i___passes(
    flat_geom: RiemannData, samples: list[Sample], k: float
) -> None:
    params = ConditionParams(rho=lambda x: [0.0, 0.0], tau=None, mu=lambda x: 0.0)

    residuals = check_case_i(flat_geom, k, params, samples, check_berwald=True)

    assert residuals.passed, str(residuals)
    assert "r-decomposition" in residuals.residuals
    assert "berwald" in residuals.residuals


def test___without_mu___check_case_i___skips_r_decomposition(
    flat_geom: RiemannData, samples: list[Sample]
) -> None:
    residuals = check_case_i(flat_geom, 0.0, ConditionParams.zero(2), samples)

    assert residuals.passed
    assert "r-decomposition" not in residuals.residuals
    assert "one-form-factor" not in residuals.residuals


def test___wrong_rho___check_case_i___detects_violation(
    flat_geom: RiemannData, samples: list[Sample]
) -> None:
    params = ConditionParams.zero(2).with_rho_offset([0.2, -0.1])

    residuals = check_case_i(flat_geom, 0.0, params, samples)

    assert not residuals.passed
    assert "riemann-spray" in residuals.failures
    assert "projective-factor" in residuals.failures


@pytest.mark.parametrize("m, k, a1", [(2.0, 0.0, 0.0), (3.0, 0.5, 1.2), (-1.0, 0.2, -0.4)])
def test___flat_parallel_data___check_case_ii___passes(
    flat_geom: RiemannData, samples: list[Sample], m: float, k: float, a1: float
) -> None:
    residuals = check_case_ii(flat_geom, m, k, a1, ConditionParams.zero(2), samples)

    assert residuals.passed, str(residuals)


def test___nonzero_tau___check_case_ii___detects_violation(
    flat_geom: RiemannData, samples: list[Sample]
) -> None:
    params = ConditionParams(rho=lambda x: [0.0, 0.0], tau=lambda x: 0.3)

    residuals = check_case_ii(flat_geom, 2.0, 0.0, 0.0, params, samples)

    assert not residuals.passed
    assert "covariant-derivative" in residuals.failures


def test___eta_family___check_case_iii___passes_with_vanishing_curvature(
    eta: EtaField, eta_metric: ABMetric, samples: list[Sample]
) -> None:
    params = eta_family_parameters(eta, 2.0)

    residuals = check_case_iii(eta_metric.geom, 2.0, 0.0, params, samples, 1e-7)

    assert residuals.passed, str(residuals)
    assert residuals.residuals["flag-curvature"] < 1e-5
    assert residuals.tolerance_for("flag-curvature") == 1e-5


def test___eta_family_with_shifted_rho___check_case_iii___skips_curvature(
    eta: EtaField, eta_metric: ABMetric, samples: list[Sample]
) -> None:
    params = eta_family_parameters(eta, 2.0).with_rho_offset([0.1, 0.1])

    residuals = check_case_iii(eta_metric.geom, 2.0, 0.0, params, samples, 1e-7)

    assert not residuals.passed
    assert "riemann-spray" in residuals.failures
    assert "flag-curvature" not in residuals.residuals


def test___curvature_disabled___check_case_iii___records_no_curvature(
    eta: EtaField, eta_metric: ABMetric, samples: list[Sample]
) -> None:
    params = eta_family_parameters(eta, 2.0)

    residuals = check_case_iii(
        eta_metric.geom, 2.0, 0.0, params, samples, 1e-7, check_curvature=False
    )

    assert residuals.passed
    assert "flag-curvature" not in residuals.residuals


def test___generic_route___check_case_iii___passes(
    eta: EtaField, eta_metric: ABMetric, samples: list[Sample]
) -> None:
    params = eta_family_parameters(eta, 2.0)

    residuals = check_case_iii(
        eta_metric.geom, 2.0, 0.0, params, samples[:1], 1e-6, route="generic"
    )

    assert residuals.passed, str(residuals)


def test___flat_parallel_data___check_case_iv___passes(flat_geom: RiemannData) -> None:
    samples = [([0.1, 0.2], [0.4, 0.9]), ([0.0, 0.0], [0.3, 0.8])]

    residuals = check_case_iv(flat_geom, 2.0, 0.3, ConditionParams.zero(2), samples)

    assert residuals.passed, str(residuals)
    assert residuals.residuals["norm-gradient"] == pytest.approx(0.0, abs=1e-12)


def test___rotation_one_form___check_case_iv___detects_varying_norm(
    rotation_geom: RiemannData,
) -> None:
    samples = [([0.1, 0.2], [0.3, 0.9])]

    residuals = check_case_iv(rotation_geom, 2.0, 0.0, ConditionParams.zero(2), samples)

    assert residuals.failures["norm-gradient"] > 0.1


@pytest.mark.parametrize("check", [check_case_iv, check_case_v])
def test___three_dimensional_data___plane_only_case___raises_dimension_error(
    check: object,
) -> None:
    geom = make_flat_parallel(3, [0.5, 0.0, 0.0], PhiSpec(PhiFamily.RANDERS)).geom
    samples = [([0.0, 0.0, 0.0], [1.0, 0.2, 0.1])]

    with pytest.raises(DimensionError, match="dimension 2"):
        check(geom, 2.0, 0.5, ConditionParams.zero(3), samples)  # type: ignore[operator]


@pytest.mark.parametrize("k1, k2", [(1.0, 0.0), (0.5, 0.5), (-2.0, 1.0)])
def test___flat_parallel_data___check_case_v___passes(
    flat_geom: RiemannData, samples: list[Sample], k1: float, k2: float
) -> None:
    residuals = check_case_v(flat_geom, k1, k2, ConditionParams.zero(2), samples)

    assert residuals.passed, str(residuals)
    assert residuals.residuals["parallel-s0"] == pytest.approx(0.0, abs=1e-12)
    assert residuals.residuals["vanishing-tau"] == 0.0


def test___reducible_constants___check_case_v___raises_case_reduction_error(
    flat_geom: RiemannData, samples: list[Sample]
) -> None:
    with pytest.raises(CaseReductionError, match="third class"):
        check_case_v(flat_geom, 0.25, 0.5, ConditionParams.zero(2), samples)


def test___nonzero_tau___check_case_v___detects_violation(
    flat_geom: RiemannData, samples: list[Sample]
) -> None:
    params = ConditionParams(rho=lambda x: [0.0, 0.0], tau=lambda x: 0.2)

    residuals = check_case_v(flat_geom, 1.0, 0.0, params, samples)

    assert residuals.failures["vanishing-tau"] == pytest.approx(0.2)
