"""Adaptive Simpson quadrature."""

from __future__ import annotations

import logging
from collections.abc import Callable

from abflat._errors import QuadratureError

_logger = logging.getLogger(__name__)

RELATIVE_TOLERANCE = 1e-10
ABSOLUTE_TOLERANCE = 1e-14
MAX_DEPTH = 60


def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
    return h / 3.0 * (fa + 4.0 * fm + fb)


def integrate_adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    *,
    rel_tol: float = RELATIVE_TOLERANCE,
    abs_tol: float = ABSOLUTE_TOLERANCE,
    max_depth: int = MAX_DEPTH,
) -> float:
    """Integrate ``f`` over ``[a, b]`` by adaptive Simpson's rule.

    Each interval is bisected until the Richardson error estimate falls below
    its share of the tolerance. The share halves at every level but never
    drops below ``abs_tol``.

    Args:
        f: The integrand, finite on the closed interval.
        a: The lower bound.
        b: The upper bound.
        rel_tol: The tolerance relative to the magnitude of the integral.
        abs_tol: The absolute tolerance floor.
        max_depth: The maximum bisection depth.

    Returns:
        The integral, with the Richardson correction applied.

    Raises:
        QuadratureError: If an interval fails to converge within ``max_depth`` bisections.
    """
    if a == b:
        return 0.0
    if a > b:
        return -integrate_adaptive_simpson(
            f, b, a, rel_tol=rel_tol, abs_tol=abs_tol, max_depth=max_depth
        )

    evaluations = 0

    def sample(t: float) -> float:
        nonlocal evaluations
        evaluations += 1
        return f(t)

    def adaptive(
        lo: float,
        hi: float,
        flo: float,
        fmid: float,
        fhi: float,
        whole: float,
        tol: float,
        depth: int,
    ) -> float:
        mid = 0.5 * (lo + hi)
        h = 0.5 * (hi - lo)
        fl = sample(0.5 * (lo + mid))
        fr = sample(0.5 * (mid + hi))
        left = _simpson(flo, fl, fmid, 0.5 * h)
        right = _simpson(fmid, fr, fhi, 0.5 * h)
        error = (left + right - whole) / 15.0
        if abs(error) <= tol:
            return left + right + error
        if depth >= max_depth:
            raise QuadratureError(
                f"Adaptive Simpson did not converge on [{lo!r}, {hi!r}] "
                f"(error estimate {abs(error):.3e}, tolerance {tol:.3e})."
            )
        half = max(0.5 * tol, abs_tol)
        return adaptive(lo, mid, flo, fl, fmid, left, half, depth + 1) + adaptive(
            mid, hi, fmid, fr, fhi, right, half, depth + 1
        )

    fa, fm, fb = sample(a), sample(0.5 * (a + b)), sample(b)
    whole = _simpson(fa, fm, fb, 0.5 * (b - a))
    tolerance = max(rel_tol * abs(whole), abs_tol)
    result = adaptive(a, b, fa, fm, fb, whole, tolerance, 0)
    _logger.debug("Integrated over [%r, %r] with %d evaluations.", a, b, evaluations)
    return result
