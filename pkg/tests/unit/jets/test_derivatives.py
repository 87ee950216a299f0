"""Tests for directional, partial and mixed derivatives."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
import pytest
from hypothesis import given, strategies as st

from abflat import DomainError
from abflat.jets import (
    PartialDerivatives,
    Scalar,
    as_real_array,
    derivative,
    directional_derivatives,
    gradient,
    hessian,
    jet_eval,
    mixed_partial,
    primal_array,
    sin,
    third_partials,
)


def _cubic(z: Sequence[Scalar]) -> Scalar:
    return z[0] * z[0] * z[1] + 3.0 * z[1] * z[2]


def test___jet_eval___returns_value_and_directional_derivatives() -> None:
    jet = jet_eval(lambda z: z[0] * z[0] * z[1], [2.0, 3.0], [1.0, 0.0])

    assert jet.as_tuple() == (12.0, 12.0, 6.0)


def test___jet_eval_with_mismatched_lengths___raises_value_error() -> None:
    with pytest.raises(ValueError):
        jet_eval(lambda z: z[0], [1.0, 2.0], [1.0])


def test___jet_eval_with_division_by_zero___raises_domain_error() -> None:
    with pytest.raises(DomainError):
        jet_eval(lambda z: 1.0 / z[0], [0.0], [1.0])


def test___gradient___matches_analytic_gradient() -> None:
    x = [1.5, -2.0, 0.5]

    result = gradient(_cubic, x)

    assert list(result) == pytest.approx([2.0 * 1.5 * -2.0, 1.5 * 1.5 + 3.0 * 0.5, 3.0 * -2.0])


def test___hessian___is_symmetric_and_matches_analytic_hessian() -> None:
    x = [1.5, -2.0, 0.5]

    result = as_real_array(hessian(_cubic, x))

    expected = np.array([[-4.0, 3.0, 0.0], [3.0, 0.0, 3.0], [0.0, 3.0, 0.0]])
    np.testing.assert_allclose(result, expected, atol=1e-12)
    np.testing.assert_array_equal(result, result.T)


def test___hessian_block___returns_requested_rows_and_columns() -> None:
    block = as_real_array(hessian(_cubic, [1.5, -2.0, 0.5], rows=[0], columns=[1, 2]))

    assert block.shape == (1, 2)
    np.testing.assert_allclose(block, [[3.0, 0.0]], atol=1e-12)


def test___partial_derivatives___reuse_cached_jets() -> None:
    calls = []

    def f(z: Sequence[Scalar]) -> Scalar:
        calls.append(1)
        return z[0] * z[1]

    partials = PartialDerivatives(f, [2.0, 3.0])
    partials.second(0, 1)
    partials.second(1, 0)

    assert len(calls) == 3
    assert partials.value == 6.0


@given(x=st.floats(min_value=-2.0, max_value=2.0), y=st.floats(min_value=-2.0, max_value=2.0))
def test___mixed_partial_of_nested_function___matches_analytic_value(x: float, y: float) -> None:
    result = mixed_partial(lambda z: sin(z[0] * z[1]), [x, y], 0, 1)

    expected = np.cos(x * y) - x * y * np.sin(x * y)
    assert float(result) == pytest.approx(expected, abs=1e-10)


def test___derivative_of_derivative___gives_second_derivative() -> None:
    second = derivative(derivative(lambda t: t * t * t))

    assert float(second(2.0)) == pytest.approx(12.0)


def test___directional_derivatives_of_array_field___has_shape_of_field() -> None:
    values, first, second = directional_derivatives(
        lambda z: [[z[0] * z[1], z[0]], [z[1], 1.0]], [2.0, 3.0], [1.0, 1.0]
    )

    assert values.shape == (2, 2)
    np.testing.assert_allclose(as_real_array(values), [[6.0, 2.0], [3.0, 1.0]])
    np.testing.assert_allclose(as_real_array(first), [[5.0, 1.0], [1.0, 0.0]])
    np.testing.assert_allclose(as_real_array(second), [[2.0, 0.0], [0.0, 0.0]])


def test___primal_array___strips_jets() -> None:
    jets = directional_derivatives(lambda z: [z[0], z[0] * z[0]], [3.0], [1.0])[0]

    np.testing.assert_array_equal(primal_array(jets), [3.0, 9.0])


def test___third_partials_of_cancelling_cubic___recovers_mixed_terms() -> None:
    def field(z: Sequence[Scalar]) -> list[Scalar]:
        return [z[0] * z[0] * z[1] - z[0] * z[1] * z[1], 0.0]

    T = primal_array(third_partials(field, [0.7, -0.4]))

    expected = np.zeros((2, 2, 2, 2))
    for index in [(0, 0, 1), (0, 1, 0), (1, 0, 0)]:
        expected[index + (0,)] = 2.0
    for index in [(0, 1, 1), (1, 0, 1), (1, 1, 0)]:
        expected[index + (0,)] = -2.0
    np.testing.assert_allclose(T, expected, atol=1e-12)


def test___third_partials_of_three_variable_cubic___is_symmetric() -> None:
    T = primal_array(third_partials(lambda z: [_cubic(z)], [0.3, -1.2, 0.8]))

    assert T.shape == (3, 3, 3, 1)
    assert T[0, 0, 1, 0] == pytest.approx(2.0)
    assert T[1, 0, 0, 0] == pytest.approx(2.0)
    assert float(np.sum(np.abs(T))) == pytest.approx(6.0)


def test___third_partials_of_quadratic___vanish() -> None:
    T = primal_array(third_partials(lambda z: [z[0] * z[1], z[1] * z[1] - 2.0 * z[0]], [1.5, 0.5]))

    np.testing.assert_allclose(T, 0.0, atol=1e-12)
