"""Estimators for the auxiliary fields ρ, τ and μ of the case conditions.

Estimates are conveniences for data whose fields are not known in closed
form. Checkers always re-verify them.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from abflat.conditions._sample import SampleGeometry, spray_remainder
from abflat.conditions._types._condition_params import ConditionParams
from abflat.jets import Scalar, primal
from abflat.riemann import RiemannData

_logger = logging.getLogger(__name__)

_CASES = ("i", "ii", "iii", "iv", "v")


def _b_contraction(sample: SampleGeometry) -> float:
    return float(sample.b_up @ sample.r_ij @ sample.b_up)


def _unit(n: int, j: int) -> list[float]:
    return [1.0 if i == j else 0.0 for i in range(n)]


def estimate_tau(g: RiemannData, x: Sequence[float], k: float) -> float:
    """Return τ from ``r_ij b^i b^j = −2τ b⁴ (1 + k b²)``.

    The relation is the contraction with ``b^i b^j`` of the r-equation of the
    second and third classes, and of the fifth class with k = k₂. The
    ``s``-terms drop out because ``s_i b^i = 0``.
    """
    sample = SampleGeometry(g, x, _unit(g.dim, 0))
    b2 = sample.b2
    tau = -_b_contraction(sample) / (2.0 * b2 * b2 * (1.0 + k * b2))
    _logger.debug("Estimated τ=%r at x=%s", tau, x)
    return tau


def estimate_mu(g: RiemannData, x: Sequence[float], k: float) -> float:
    """Return μ from ``r_ij b^i b^j = μ b² (1 + k b²)``, the first-class r-decomposition."""
    sample = SampleGeometry(g, x, _unit(g.dim, 0))
    b2 = sample.b2
    mu = _b_contraction(sample) / (b2 * (1.0 + k * b2))
    _logger.debug("Estimated μ=%r at x=%s", mu, x)
    return mu


def estimate_rho(
    g: RiemannData,
    x: Sequence[float],
    case: str,
    *,
    tau: float = 0.0,
    m: float = 2.0,
    k: float = 0.0,
    k1: float = 0.0,
    k2: float = 0.0,
) -> list[float]:
    """Return ρ_j read off the Riemannian spray relation of a case at ``y = e_j``.

    With ``y = e_j`` the relation ``G^i_α = ρ_l y^l y^i + (remainder)^i``
    gives ``ρ_j = G^j_α(e_j) − (remainder)^j(e_j)``.
    """
    rho = []
    for j in range(g.dim):
        sample = SampleGeometry(g, x, _unit(g.dim, j))
        remainder = spray_remainder(case, sample, tau=tau, m=m, k=k, k1=k1, k2=k2)
        rho.append(float(sample.spray_alpha[j] - remainder[j]))
    return rho


def estimate_condition_params(
    g: RiemannData,
    case: str,
    *,
    m: float = 2.0,
    k: float = 0.0,
    k1: float = 0.0,
    k2: float = 0.0,
) -> ConditionParams:
    """Return ConditionParams whose fields are estimated pointwise from the data.

    Args:
        g: The Riemannian data.
        case: One of "i", "ii", "iii", "iv" and "v".
        m (optional): The exponent of the second, third and fourth classes.
        k (optional): The constant k of the first four classes.
        k1 (optional): The constant k₁ of the fifth class.
        k2 (optional): The constant k₂ of the fifth class.

    Raises:
        ValueError: If the case is unknown.
    """
    if case not in _CASES:
        raise ValueError(f"Unknown case: {case!r}")

    def tau(point: Sequence[Scalar]) -> float:
        x = [primal(xi) for xi in point]
        if case in ("ii", "iii"):
            return estimate_tau(g, x, k)
        if case == "v":
            return estimate_tau(g, x, k2)
        return 0.0

    def rho(point: Sequence[Scalar]) -> list[float]:
        x = [primal(xi) for xi in point]
        return estimate_rho(g, x, case, tau=tau(x), m=m, k=k, k1=k1, k2=k2)

    def mu(point: Sequence[Scalar]) -> float:
        return estimate_mu(g, [primal(xi) for xi in point], k)

    return ConditionParams(rho=rho, tau=tau, mu=mu if case == "i" else None)

