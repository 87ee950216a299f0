"""Closed-form fourth-class profiles and their Randers and square identifications."""

from __future__ import annotations

import math
from typing import Literal

from abflat._errors import DenominatorZeroError, DomainError
from abflat.metric import PhiFamily, PhiSpec

ClosedForm = Literal["critical", "fourth-m2", "fourth-m4"]

_CRITICAL_TOLERANCE = 1e-12


def make_phi_closed_forms(
    which: ClosedForm, *, b: float, k: float | None = None, m: float = 2.0
) -> PhiSpec:
    """Return a closed-form solution of the fourth-class profile equation.

    ``"critical"`` is ``s^m (1 − s²/b²)^((1−m)/2)``, the solution for
    ``k = 1/b²`` and any m; it is the third-class profile with constant
    ``−1/b²``. ``"fourth-m2"`` and ``"fourth-m4"`` are the m = 2 and m = 4
    solutions for ``k ≠ 1/b²``.

    Args:
        which: The closed form.
        b: The constant b, positive.
        k (optional): The constant k. Implied by ``b`` for ``"critical"``,
            and 0 by default otherwise.
        m (optional): The exponent of ``"critical"``; the other forms fix it.

    Raises:
        ValueError: If the form is unknown or ``k`` contradicts ``"critical"``.
        DenominatorZeroError: If ``k b² = 1`` for ``"fourth-m2"`` or ``"fourth-m4"``.
    """
    if b <= 0.0:
        raise ValueError(f"The constant b must be positive, got {b!r}.")
    if which == "critical":
        if k is not None and abs(k * b * b - 1.0) > _CRITICAL_TOLERANCE:
            raise ValueError(f"The critical form needs k = 1/b² = {1.0 / (b * b)!r}, got {k!r}.")
        return PhiSpec(PhiFamily.THIRD_CLASS, m=m, k=-1.0 / (b * b))
    if which == "fourth-m2":
        return PhiSpec(PhiFamily.FOURTH_CLASS_CLOSED_M2, k=k or 0.0, b=b)
    if which == "fourth-m4":
        return PhiSpec(PhiFamily.FOURTH_CLASS_CLOSED_M4, k=k or 0.0, b=b)
    raise ValueError(f"Unknown closed form: {which!r}")


def _tilde_radicands(b: float, k: float, alpha: float, beta: float) -> tuple[float, float, float]:
    if b <= 0.0:
        raise DomainError(f"The constant b must be positive, got {b!r}.")
    scale = 1.0 - k * b * b
    if scale == 0.0:
        raise DenominatorZeroError("1 − k b²", scale)
    if scale < 0.0:
        raise DomainError(f"The identification needs k < 1/b², got k b² = {k * b * b!r}.")
    conformal = alpha * alpha - k * beta * beta
    if conformal <= 0.0:
        raise DomainError(f"The identification needs α² − kβ² > 0, got {conformal!r}.")
    cone = b * b * alpha * alpha - beta * beta
    if cone < 0.0:
        raise DomainError(f"The identification needs b²α² − β² ≥ 0, got {cone!r}.")
    return scale, math.sqrt(conformal), math.sqrt(cone)


def identify_tilde_forms(
    b: float, k: float, alpha: float, beta: float
) -> tuple[tuple[float, float], tuple[float, float]]:
    """Evaluate the m = 2 and m = 4 metrics directly and through their Randers and square forms.

    With ``α̃ = 2b²√(α² − kβ²)/(1 − k b²)`` and ``β̃ = −2b√(b²α² − β²)/(1 − k b²)``
    the m = 2 metric equals the Randers form ``α̃ + β̃``. With
    ``α̃ = 4b⁴√(α² − kβ²)/(1 − k b²)²`` and ``β̃ = −4b³√(b²α² − β²)/(1 − k b²)²``
    the m = 4 metric equals the square form ``(α̃ + β̃)²/α̃``.

    Args:
        b: The constant b, positive.
        k: The constant k, below ``1/b²``.
        alpha: The value of α at a vector.
        beta: The value of β at the same vector.

    Returns:
        ``((F_m2, randers), (F_m4, square))``, where the first member of each
        pair is ``α φ(β/α)`` for the closed-form profile.

    Raises:
        DomainError: Unless ``k < 1/b²``, ``α² − kβ² > 0`` and ``b²α² − β² ≥ 0``.
    """
    scale, conformal, cone = _tilde_radicands(b, k, alpha, beta)
    s = beta / alpha
    f_m2 = alpha * float(make_phi_closed_forms("fourth-m2", b=b, k=k)(s))
    f_m4 = alpha * float(make_phi_closed_forms("fourth-m4", b=b, k=k)(s))

    randers = (2.0 * b * b * conformal - 2.0 * b * cone) / scale
    alpha_sq = 4.0 * b**4 * conformal / (scale * scale)
    beta_sq = -4.0 * b**3 * cone / (scale * scale)
    square = (alpha_sq + beta_sq) ** 2 / alpha_sq
    return (f_m2, randers), (f_m4, square)
