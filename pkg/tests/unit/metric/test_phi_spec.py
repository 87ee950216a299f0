"""Tests for the PhiSpec profile type and profile evaluation."""

from __future__ import annotations

import pytest

from abflat import DenominatorZeroError, DomainError
from abflat.metric import (
    PhiFamily,
    PhiSpec,
    phi_eval,
    phi_fourth_class_quadrature,
    regularity_margin,
)


def test___init___with_family_identifier___resolves_family() -> None:
    phi = PhiSpec("third-class", m=3.0, k=-0.5)

    assert phi.family is PhiFamily.THIRD_CLASS
    assert phi.m == 3.0
    assert phi.k == -0.5


def test___init___with_unknown_identifier___raises_value_error() -> None:
    with pytest.raises(ValueError, match="Unknown φ family"):
        PhiSpec("sixth-class")


@pytest.mark.parametrize("m", [0.0, 1.0])
def test___init___with_excluded_exponent___raises_value_error(m: float) -> None:
    with pytest.raises(ValueError):
        PhiSpec(PhiFamily.THIRD_CLASS, m=m)


def test___init___general_family_without_factor___raises_value_error() -> None:
    with pytest.raises(ValueError):
        PhiSpec(PhiFamily.GENERAL)


def test___init___closed_fourth_class_with_critical_k___raises_denominator_zero_error() -> None:
    with pytest.raises(DenominatorZeroError):
        PhiSpec(PhiFamily.FOURTH_CLASS_CLOSED_M2, k=0.25, b=2.0)


def test___init___quadrature_with_negative_exponent___raises_value_error() -> None:
    with pytest.raises(ValueError):
        PhiSpec(PhiFamily.FOURTH_CLASS_QUADRATURE, m=-1.0)


def test___closed_fourth_class_forms___fix_their_exponent() -> None:
    assert PhiSpec(PhiFamily.FOURTH_CLASS_CLOSED_M2, m=7.0).m == 2.0
    assert PhiSpec(PhiFamily.FOURTH_CLASS_CLOSED_M4).m == 4.0


@pytest.mark.parametrize(
    "phi, s, expected",
    [
        (PhiSpec(PhiFamily.RANDERS), 0.5, 1.5),
        (PhiSpec(PhiFamily.SQUARE), 0.5, 2.25),
        (PhiSpec(PhiFamily.FIRST_CLASS, k=2.0), 0.5, 3.0),
        (PhiSpec(PhiFamily.FIFTH_CLASS, k1=1.0, k2=0.5), 0.5, 0.5 + 2.0 + 8.0),
        (PhiSpec(PhiFamily.THIRD_CLASS, m=2.0, k=0.0), 0.5, 0.25),
        (PhiSpec(PhiFamily.THIRD_CLASS, m=3.0, k=1.0), 0.5, 0.125 / 1.25),
        (PhiSpec(PhiFamily.SECOND_CLASS, m=3.0, k=1.0, a1=2.0), 0.5, 1.0 + 0.125 / 1.25),
    ],
)
def test___call___evaluates_profile(phi: PhiSpec, s: float, expected: float) -> None:
    assert phi(s) == pytest.approx(expected, rel=1e-14)


def test___general_family___combines_linear_term_and_factor() -> None:
    phi = PhiSpec(PhiFamily.GENERAL, m=2.0, c=0.5, varphi=lambda s: 1.0 + s)

    assert phi(2.0) == pytest.approx(0.5 * 2.0 + 4.0 * 3.0)


def test___phi_eval___returns_value_and_two_derivatives() -> None:
    value, d1, d2 = phi_eval(PhiSpec(PhiFamily.FIRST_CLASS, k=1.0), 0.5)

    assert (value, d1, d2) == (2.5, -3.0, 16.0)


def test___phi_eval_at_singular_locus___raises_domain_error() -> None:
    with pytest.raises(DomainError):
        phi_eval(PhiSpec(PhiFamily.FIRST_CLASS), 0.0)


@pytest.mark.parametrize("s", [0.0, 1.0, 1.5])
def test___quadrature_outside_open_interval___raises_domain_error(s: float) -> None:
    with pytest.raises(DomainError):
        phi_fourth_class_quadrature(3.0, 0.0, 1.0, s)


@pytest.mark.parametrize("s", [0.05, 0.3, 0.6, 0.95])
def test___quadrature_with_m2___matches_closed_form(s: float) -> None:
    closed = PhiSpec(PhiFamily.FOURTH_CLASS_CLOSED_M2, k=0.5, b=1.0)

    assert phi_fourth_class_quadrature(2.0, 0.5, 1.0, s) == pytest.approx(closed(s), rel=1e-8)


@pytest.mark.parametrize("s", [0.05, 0.3, 0.6, 0.95])
def test___quadrature_with_m4___matches_closed_form(s: float) -> None:
    closed = PhiSpec(PhiFamily.FOURTH_CLASS_CLOSED_M4, k=-1.0, b=1.2)

    quadrature = phi_fourth_class_quadrature(4.0, -1.0, 1.2, s * 1.2)

    assert quadrature == pytest.approx(closed(s * 1.2), rel=1e-8)


def test___regularity_margin_of_randers_profile___is_constant() -> None:
    value, margin = regularity_margin(PhiSpec(PhiFamily.RANDERS), 0.3, 0.64)

    assert value == pytest.approx(1.3)
    assert margin == pytest.approx(1.0)


@pytest.mark.parametrize(
    "phi, s, b, accepted",
    [
        (PhiSpec(PhiFamily.FIRST_CLASS), 0.05, 1.0, False),
        (PhiSpec(PhiFamily.FIRST_CLASS), 0.2, 1.0, True),
        (PhiSpec(PhiFamily.FIRST_CLASS, k=1.0), -0.5, 1.0, True),
        (PhiSpec(PhiFamily.FIRST_CLASS), -0.05, 1.0, False),
        (PhiSpec(PhiFamily.THIRD_CLASS, m=-2.0, k=0.5), -0.5, 1.0, True),
        (PhiSpec(PhiFamily.FIFTH_CLASS, k1=1.0, k2=0.5), -0.3, 1.0, True),
        (PhiSpec(PhiFamily.THIRD_CLASS, m=-0.5), -0.5, 1.0, False),
        (PhiSpec(PhiFamily.THIRD_CLASS, m=0.5), 0.05, 1.0, False),
        (PhiSpec(PhiFamily.THIRD_CLASS, m=2.0), -0.5, 1.0, True),
        (PhiSpec(PhiFamily.RANDERS), 0.0, 1.0, True),
        (PhiSpec(PhiFamily.FOURTH_CLASS_CLOSED_M2, b=1.0), 0.97, 1.0, False),
        (PhiSpec(PhiFamily.FOURTH_CLASS_CLOSED_M2, b=1.0), 0.5, 1.0, True),
    ],
)
def test___accepts_sample___applies_singular_locus_policy(
    phi: PhiSpec, s: float, b: float, accepted: bool
) -> None:
    assert phi.accepts_sample(s, b) is accepted


def test___fifth_class_on_degenerate_norm___check_norm___raises_denominator_zero_error() -> None:
    phi = PhiSpec(PhiFamily.FIFTH_CLASS, k1=1.0, k2=-2.0)

    with pytest.raises(DenominatorZeroError, match=r"1 \+ k₂b²"):
        phi.check_norm(0.5)


@pytest.mark.parametrize(
    "phi",
    [
        PhiSpec(PhiFamily.FIFTH_CLASS, k1=1.0, k2=-2.0),
        PhiSpec(PhiFamily.FIRST_CLASS, k=-2.0),
        PhiSpec(PhiFamily.THIRD_CLASS, m=2.0, k=-2.0),
    ],
)
def test___regular_norm___check_norm___accepts(phi: PhiSpec) -> None:
    phi.check_norm(0.25)


def test___eq___compares_parameters() -> None:
    assert PhiSpec(PhiFamily.THIRD_CLASS, m=3.0) == PhiSpec("third-class", m=3.0)
    assert PhiSpec(PhiFamily.THIRD_CLASS, m=3.0) != PhiSpec(PhiFamily.THIRD_CLASS, m=2.0)
