"""Tests for Christoffel symbols, sprays, curvature and the β-derivative apparatus."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from abflat import DimensionError
from abflat.catalog import funk_one_form, klein_metric
from abflat.jets import Scalar, primal
from abflat.riemann import (
    RiemannData,
    beta_apparatus,
    christoffel,
    covariant_derivative_beta,
    metric_compatibility_residual,
    one_form_norm_squared,
    riemann_curvature,
    sectional_curvature,
    spray_riemann,
)

_coordinate = st.floats(min_value=-0.5, max_value=0.5)


def _sphere_metric(x: Sequence[Scalar]) -> list[list[Scalar]]:
    conformal = 4.0 / ((1.0 + x[0] * x[0] + x[1] * x[1]) ** 2)
    return [[conformal, 0.0], [0.0, conformal]]


def _rotation_form(x: Sequence[Scalar]) -> list[Scalar]:
    return [x[1], -x[0]]


def test___flat_metric___has_vanishing_christoffel_symbols_and_curvature(
    flat_rotation: RiemannData,
) -> None:
    x = [0.3, -0.2]

    assert np.max(np.abs(christoffel(flat_rotation, x))) == 0.0
    assert np.max(np.abs(riemann_curvature(flat_rotation, x))) == 0.0


def test___round_sphere___has_unit_sectional_curvature() -> None:
    sphere = RiemannData(2, _sphere_metric, lambda x: [0.0, 0.0], name="sphere")

    curvature = sectional_curvature(sphere, [0.3, -0.4])

    assert primal(curvature) == pytest.approx(1.0, abs=1e-9)


@settings(
    max_examples=20, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture]
)
@given(x0=_coordinate, x1=_coordinate)
def test___klein_metric___has_sectional_curvature_minus_one(
    klein: RiemannData, x0: float, x1: float
) -> None:
    curvature = sectional_curvature(klein, [x0, x1])

    assert primal(curvature) == pytest.approx(-1.0, abs=1e-8)


def test___klein_metric___spray_is_collinear_with_direction(klein: RiemannData) -> None:
    x, y = [0.3, -0.2], [1.0, 0.5]

    spray = spray_riemann(klein, x, y)

    factor = (0.3 * 1.0 - 0.2 * 0.5) / (1.0 - 0.3**2 - 0.2**2)
    np.testing.assert_allclose(spray, [factor * 1.0, factor * 0.5], rtol=1e-10)


def test___christoffel_symbols___are_symmetric_in_lower_indices(klein: RiemannData) -> None:
    gamma = christoffel(klein, [0.1, 0.4])

    np.testing.assert_array_equal(gamma, np.transpose(gamma, (0, 2, 1)))


def test___levi_civita_connection___is_metric_compatible(klein: RiemannData) -> None:
    assert metric_compatibility_residual(klein, [0.2, 0.3]) < 1e-10


def test___riemann_curvature___is_antisymmetric_in_last_indices(klein: RiemannData) -> None:
    curvature = riemann_curvature(klein, [0.2, 0.3])

    np.testing.assert_array_equal(curvature, -np.transpose(curvature, (0, 1, 3, 2)))


def test___rotation_form_on_flat_metric___is_killing_with_constant_curl(
    flat_rotation: RiemannData,
) -> None:
    x, y = [0.3, -0.2], [1.0, 2.0]

    derivatives = beta_apparatus(flat_rotation, x, y)

    np.testing.assert_allclose(derivatives.b_ij, [[0.0, 1.0], [-1.0, 0.0]])
    np.testing.assert_allclose(derivatives.r_ij, np.zeros((2, 2)), atol=1e-15)
    np.testing.assert_allclose(derivatives.s_ij, [[0.0, 1.0], [-1.0, 0.0]])
    assert primal(derivatives.b2) == pytest.approx(0.3**2 + 0.2**2)
    assert primal(derivatives.s0) == pytest.approx(float(np.dot(derivatives.s_j, y)))


def test___funk_one_form___is_closed_for_klein_metric() -> None:
    geom = RiemannData(2, klein_metric, lambda x: funk_one_form([0.1, 0.0], 1, x))

    derivatives = beta_apparatus(geom, [0.2, -0.3], [1.0, 0.5])

    np.testing.assert_allclose(derivatives.s_ij, np.zeros((2, 2)), atol=1e-12)


def test___covariant_derivative_beta___matches_apparatus() -> None:
    geom = RiemannData(2, klein_metric, _rotation_form)
    x = [0.2, 0.1]

    np.testing.assert_allclose(
        covariant_derivative_beta(geom, x), beta_apparatus(geom, x, [1.0, 0.0]).b_ij
    )


def test___one_form_norm_squared___contracts_with_inverse_metric() -> None:
    geom = RiemannData(2, lambda x: [[4.0, 0.0], [0.0, 1.0]], lambda x: [2.0, 3.0])

    assert primal(one_form_norm_squared(geom, [0.0, 0.0])) == pytest.approx(10.0)


def test___riemann_data_with_wrong_metric_shape___raises_value_error() -> None:
    geom = RiemannData(2, lambda x: [[1.0]], lambda x: [0.0, 0.0])

    with pytest.raises(ValueError):
        geom.metric([0.0, 0.0])


@pytest.mark.parametrize("dim", [0, 1])
def test___riemann_data_below_dimension_two___raises_dimension_error(dim: int) -> None:
    with pytest.raises(DimensionError, match="at least 2"):
        RiemannData(dim, lambda x: [[1.0] * dim] * dim, lambda x: [0.0] * dim)
