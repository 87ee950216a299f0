"""Power-series solutions of the fourth-class profile equation and their closed-form oracles.

All routines are generic over ``float`` and :class:`fractions.Fraction`, so
coefficients can be computed exactly for rational parameters.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Literal, TypeVar

from abflat._errors import DenominatorZeroError
from abflat.catalog._types._series_solution import SeriesSolution

_logger = logging.getLogger(__name__)

N = TypeVar("N", float, Fraction)

TaylorForm = Literal["fourth-m2", "critical"]


def series_solve(m: N, k: N, b: N, order: int) -> SeriesSolution:
    """Solve the fourth-class profile equation with ``φ = s^m (1 + Σ c_j s^(2j))``.

    With ``e_j = m + 2j`` the coefficients follow the recurrence
    ``2j b² e_j c_j = −(1 − e_{j−1})(2 + e_{j−1} − m + k b² e_{j−1}) c_{j−1}
    + k (1 − e_{j−2})(1 + e_{j−2}) c_{j−2}`` with ``c_0 = 1`` and ``c_{−1} = 0``.

    Args:
        m: The exponent m.
        k: The constant k.
        b: The constant b, nonzero.
        order: The truncation order J, at least 0.

    Raises:
        ValueError: If ``b`` is zero or ``order`` is negative.
        DenominatorZeroError: If ``m + 2j`` vanishes for some ``j ≤ J``.

    >>> series_solve(2.0, 0.0, 1.0, 2).coeffs
    (0.25, 0.125)
    """
    if b == 0:
        raise ValueError("The constant b must be nonzero.")
    if order < 0:
        raise ValueError(f"Order must be non-negative, got {order}.")
    b2 = b * b
    coeffs: list[N] = []
    previous: N = type(m)(1)
    before: N = type(m)(0)
    for j in range(1, order + 1):
        e_j = m + 2 * j
        if e_j == 0:
            raise DenominatorZeroError(f"m + 2·{j}", 0.0)
        e1 = m + 2 * (j - 1)
        e2 = m + 2 * (j - 2)
        numerator = -previous * (1 - e1) * (2 + e1 - m + k * b2 * e1) + k * before * (1 - e2) * (
            1 + e2
        )
        current = numerator / (2 * j * b2 * e_j)
        coeffs.append(current)
        previous, before = current, previous
    _logger.debug("Series coefficients for m=%s, k=%s, b=%s: %s", m, k, b, coeffs)
    return SeriesSolution(m=m, k=k, b=b, coeffs=coeffs)


def leading_series_coefficients(m: N, k: N, b: N) -> tuple[N, N, N, N]:
    """Return the closed forms of ``c_1`` through ``c_4``.

    ``c_3`` and ``c_4`` are expressed through their predecessors, as they are
    obtained when the equation is expanded by hand.
    """
    b2 = b * b
    kb2 = k * b2
    c1 = (m - 1) * (m * kb2 + 2) / (2 * (m + 2) * b2)
    c2 = (m * m - 1) * (m * kb2 * (m * kb2 + 2 * kb2 + 4) + 8) / (8 * (m + 2) * (m + 4) * b2 * b2)
    c3 = (m + 3) / (6 * (m + 6) * b2) * ((m * kb2 + 4 * kb2 + 6) * c2 - (m + 1) * k * c1)
    c4 = (m + 5) / (8 * (m + 8) * b2) * ((m * kb2 + 6 * kb2 + 8) * c3 - (m + 3) * k * c2)
    return c1, c2, c3, c4


def generalized_binomial(r: N, n: int) -> N:
    """Return ``C(r, n) = r (r − 1) ⋯ (r − n + 1) / n!``.

    >>> generalized_binomial(0.5, 2)
    -0.125
    """
    result: N = type(r)(1)
    for i in range(n):
        result = result * (r - i) / (i + 1)
    return result


def closed_form_taylor_coefficients(
    which: TaylorForm, m: N, k: N, b: N, order: int
) -> list[N]:
    """Return the normalized Taylor coefficients ``c_1..c_J`` of a closed-form solution.

    ``"fourth-m2"`` expands ``2b/(1 − k b²)(b√(1 − k s²) − √(b² − s²))`` whose
    ``s^(2+2j)`` coefficient is
    ``2b²/(1 − k b²) C(1/2, j + 1) ((−k)^(j+1) − (−1/b²)^(j+1))``; ``m`` must
    be 2. ``"critical"`` expands ``s^m (1 − s²/b²)^((1−m)/2)``, the solution
    for ``k = 1/b²``, with ``c_j = C((1 − m)/2, j)(−1/b²)^j``.

    Raises:
        ValueError: If the form is unknown or its parameters do not apply.
        DenominatorZeroError: If ``k b² = 1`` for ``"fourth-m2"``.
    """
    b2 = b * b
    if which == "fourth-m2":
        if m != 2:
            raise ValueError(f"The fourth-m2 form has m = 2, got {m}.")
        scale = 1 - k * b2
        if scale == 0:
            raise DenominatorZeroError("1 − k b²", 0.0)
        half = type(m)(1) / 2
        coeffs: list[N] = []
        for j in range(1, order + 1):
            bracket = (-k) ** (j + 1) - (-1 / b2) ** (j + 1)
            coeffs.append(2 * b2 / scale * generalized_binomial(half, j + 1) * bracket)
        return coeffs
    if which == "critical":
        if abs(k * b2 - 1) > 1e-12:
            raise ValueError(f"The critical form needs k = 1/b², got k b² = {k * b2}.")
        exponent = (1 - m) / 2
        return [generalized_binomial(exponent, j) * (-1 / b2) ** j for j in range(1, order + 1)]
    raise ValueError(f"Unknown closed form: {which!r}")
