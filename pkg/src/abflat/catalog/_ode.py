"""Residuals of the ordinary differential equations that profile functions must satisfy."""

from __future__ import annotations

from collections.abc import Callable

from abflat._errors import DenominatorZeroError
from abflat.jets import Scalar, jet_eval, primal

Profile = Callable[[Scalar], Scalar]


def _profile_jet(phi: Profile, s: float) -> tuple[float, float, float]:
    jet = jet_eval(lambda z: phi(z[0]), [s], [1.0])
    return primal(jet.v0), primal(jet.v1), primal(jet.v2)


def profile_ode_residual(phi: Profile, m: float, k: float, b: float, s: float) -> float:
    """Return the relative residual of the fourth-class profile equation at ``s``.

    The equation is
    ``(φ − sφ' + (b² − s²)φ'') / (sφ + (b² − s²)φ') = (m − 1) / (s(1 − k s²))``
    and the residual is ``|left − right| / (1 + |right|)``.

    Raises:
        DenominatorZeroError: If either side divides by zero at ``s``.
    """
    value, d1, d2 = _profile_jet(phi, s)
    b2 = b * b
    denominator = s * value + (b2 - s * s) * d1
    if denominator == 0.0:
        raise DenominatorZeroError("sφ + (b² − s²)φ'", denominator)
    scale = s * (1.0 - k * s * s)
    if scale == 0.0:
        raise DenominatorZeroError("s(1 − k s²)", scale)
    left = (value - s * d1 + (b2 - s * s) * d2) / denominator
    right = (m - 1.0) / scale
    return abs(left - right) / (1.0 + abs(right))


def second_class_identity_residual(phi: Profile, m: float, k: float, s: float) -> float:
    """Return the relative residual of ``φ'' = (k s² − m)(φ − sφ') / (s²(1 + k s²))``.

    Every second-class profile ``a₁ s + s^m (1 + k s²)^((1−m)/2)`` satisfies it
    whatever a₁ is.

    Raises:
        DenominatorZeroError: If ``s²(1 + k s²)`` vanishes.
    """
    value, d1, d2 = _profile_jet(phi, s)
    scale = s * s * (1.0 + k * s * s)
    if scale == 0.0:
        raise DenominatorZeroError("s²(1 + k s²)", scale)
    expected = (k * s * s - m) * (value - s * d1) / scale
    return abs(d2 - expected) / (1.0 + abs(d2))
