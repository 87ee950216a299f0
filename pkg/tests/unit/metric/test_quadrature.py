"""Tests for adaptive Simpson quadrature."""

from __future__ import annotations

import math

import pytest

from abflat import QuadratureError
from abflat.metric import integrate_adaptive_simpson


def test___integrate_polynomial___is_exact() -> None:
    assert integrate_adaptive_simpson(lambda t: t * t, 0.0, 1.0) == pytest.approx(1.0 / 3.0)


def test___integrate_with_reversed_bounds___changes_sign() -> None:
    forward = integrate_adaptive_simpson(math.exp, 0.0, 1.0)
    backward = integrate_adaptive_simpson(math.exp, 1.0, 0.0)

    assert backward == -forward
    assert forward == pytest.approx(math.e - 1.0, rel=1e-10)


def test___integrate_over_empty_interval___returns_zero() -> None:
    assert integrate_adaptive_simpson(math.exp, 0.5, 0.5) == 0.0


def test___integrate_steep_integrand___reaches_relative_tolerance() -> None:
    result = integrate_adaptive_simpson(lambda t: (1.0 - t * t) ** -1.5, 0.0, 0.99)

    assert result == pytest.approx(0.99 / math.sqrt(1.0 - 0.99**2), rel=1e-9)


def test___integrate_discontinuous_integrand_with_shallow_depth___raises_quadrature_error() -> (
    None
):
    with pytest.raises(QuadratureError):
        integrate_adaptive_simpson(lambda t: 0.0 if t < 0.3 else 1.0, 0.0, 1.0, max_depth=1)
