"""Klein-ball Randers and square metrics of constant flag curvature."""

from __future__ import annotations

import logging
from collections.abc import Sequence

from abflat._errors import DimensionError, DomainError
from abflat.jets import Scalar, primal
from abflat.metric import ABMetric, PhiFamily, PhiSpec
from abflat.riemann import RiemannData

_logger = logging.getLogger(__name__)


def _validate(n: int, a_vec: Sequence[float], sign: int) -> list[float]:
    if n < 2:
        raise DimensionError(f"Dimension must be at least 2, got {n}.")
    if len(a_vec) != n:
        raise ValueError(f"The vector a has {len(a_vec)} components, expected {n}.")
    if sign not in (1, -1):
        raise ValueError(f"Sign must be +1 or -1, got {sign!r}.")
    return [float(ai) for ai in a_vec]


def _ball_gap(x: Sequence[Scalar]) -> Scalar:
    gap: Scalar = 1.0
    for xi in x:
        gap = gap - xi * xi
    if primal(gap) <= 0.0:
        raise DomainError(f"Point {[primal(xi) for xi in x]} lies outside the unit ball.")
    return gap


def _shift(a: Sequence[float], x: Sequence[Scalar]) -> Scalar:
    shift: Scalar = 1.0
    for ai, xi in zip(a, x):
        shift = shift + ai * xi
    if primal(shift) <= 0.0:
        raise DomainError(f"1 + ⟨a, x⟩ must be positive, got {primal(shift)!r}.")
    return shift


def klein_metric(x: Sequence[Scalar]) -> list[list[Scalar]]:
    """Return the Klein metric ``((1 − |x|²) δ_ij + x_i x_j) / (1 − |x|²)²`` of the unit ball."""
    gap = _ball_gap(x)
    n = len(x)
    denominator = gap * gap
    return [
        [((gap if i == j else 0.0) + x[i] * x[j]) / denominator for j in range(n)]
        for i in range(n)
    ]


def funk_one_form(a: Sequence[float], sign: int, x: Sequence[Scalar]) -> list[Scalar]:
    """Return ``±{x_i / (1 − |x|²) + a_i / (1 + ⟨a, x⟩)}``, the closed 1-form of the Funk metric."""
    gap = _ball_gap(x)
    shift = _shift(a, x)
    return [sign * (xi / gap + ai / shift) for xi, ai in zip(x, a)]


def make_randers_klein(n: int, a_vec: Sequence[float] | None = None, sign: int = 1) -> ABMetric:
    """Return the Funk-type Randers metric ``F = α + β`` of constant flag curvature −1/4.

    α is the Klein metric of the unit ball and β is the closed 1-form
    ``±{⟨x, y⟩ / (1 − |x|²) + ⟨a, y⟩ / (1 + ⟨a, x⟩)}``.

    Args:
        n: The dimension.
        a_vec (optional): The constant vector a. Defaults to zero.
        sign (optional): The sign of β, +1 or -1.

    Raises:
        ValueError: If the arguments are inconsistent.
    """
    a = _validate(n, [0.0] * n if a_vec is None else a_vec, sign)
    geom = RiemannData(
        n,
        klein_metric,
        lambda x: funk_one_form(a, sign, x),
        name=f"randers-klein(a={a}, sign={sign:+d})",
    )
    return ABMetric(geom, PhiSpec(PhiFamily.RANDERS))


def square_factor(a: Sequence[float], x: Sequence[Scalar]) -> Scalar:
    """Return ``λ = (1 + ⟨a, x⟩)² / (1 − |x|²)``."""
    shift = _shift(a, x)
    return shift * shift / _ball_gap(x)


def make_square_klein(n: int, a_vec: Sequence[float] | None = None, sign: int = 1) -> ABMetric:
    """Return the square metric ``F = (α + β)² / α`` of zero flag curvature.

    α and β are λ times the Klein metric and the Funk 1-form, where
    ``λ = (1 + ⟨a, x⟩)² / (1 − |x|²)``.

    Args:
        n: The dimension.
        a_vec (optional): The constant vector a. Defaults to zero.
        sign (optional): The sign of β, +1 or -1.

    Raises:
        ValueError: If the arguments are inconsistent.
    """
    a = _validate(n, [0.0] * n if a_vec is None else a_vec, sign)

    def metric(x: Sequence[Scalar]) -> list[list[Scalar]]:
        scale = square_factor(a, x)
        scale2 = scale * scale
        return [[scale2 * entry for entry in row] for row in klein_metric(x)]

    def one_form(x: Sequence[Scalar]) -> list[Scalar]:
        scale = square_factor(a, x)
        return [scale * entry for entry in funk_one_form(a, sign, x)]

    geom = RiemannData(n, metric, one_form, name=f"square-klein(a={a}, sign={sign:+d})")
    return ABMetric(geom, PhiSpec(PhiFamily.SQUARE))
