"""The η-deformed m-Kropina family, first-class Kropina data and the Kropina deformation."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence

from abflat._errors import ConstraintViolationError, DomainError
from abflat.catalog._types._eta_field import EtaField
from abflat.conditions import ConditionParams, check_case_i
from abflat.jets import Scalar, gradient, power, primal
from abflat.metric import ABMetric, PhiFamily, PhiSpec
from abflat.riemann import (
    RiemannData,
    beta_apparatus,
    contract,
    mat_vec,
    one_form_norm_squared,
)

_logger = logging.getLogger(__name__)

Sample = tuple[Sequence[float], Sequence[float]]


def _check_exponent(m: float) -> None:
    if m in (0.0, 1.0):
        raise ValueError(f"The exponent m must not be 0 or 1, got {m!r}.")


def make_flat_parallel(
    n: int, b_vec: Sequence[float], phi: PhiSpec, *, name: str = ""
) -> ABMetric:
    """Return the metric with Euclidean α and constant β, which is locally Minkowskian."""
    if len(b_vec) != n:
        raise ValueError(f"The 1-form has {len(b_vec)} components, expected {n}.")
    b = [float(bi) for bi in b_vec]
    identity = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    label = name or f"flat-parallel(b={b})"
    geom = RiemannData(n, lambda x: identity, lambda x: list(b), name=label)
    return ABMetric(geom, phi)


def make_third_class_eta(n: int, m: float, k: float, eta: EtaField) -> ABMetric:
    """Return the η-deformed third-class metric ``F = β^m (α² + kβ²)^((1−m)/2)``.

    With ``p = m/(m − 1)`` the data are ``α² = η^(2p) |y|² − k η² (y¹)²`` and
    ``β = η y¹``. Then ``α² + kβ² = η^(2p) |y|²`` and F reduces to the
    Minkowski norm ``(y¹)^m |y|^(1−m)`` for every η, while α is generally not
    flat and β not parallel.

    Args:
        n: The dimension, at least 2.
        m: The exponent, not 0 or 1.
        k: The constant k.
        eta: The positive field η.

    Raises:
        ValueError: If ``m`` is 0 or 1 or ``n`` is less than 2.
    """
    _check_exponent(m)
    if n < 2:
        raise ValueError(f"Dimension must be at least 2, got {n}.")
    p = m / (m - 1.0)

    def metric(x: Sequence[Scalar]) -> list[list[Scalar]]:
        e = eta(x)
        conformal = power(e, 2.0 * p)
        first = conformal - k * e * e
        if primal(first) <= 0.0:
            raise DomainError(f"α is not positive definite at x={[primal(xi) for xi in x]}.")
        return [
            [(first if i == 0 else conformal) if i == j else 0.0 for j in range(n)]
            for i in range(n)
        ]

    def one_form(x: Sequence[Scalar]) -> list[Scalar]:
        return [eta(x)] + [0.0] * (n - 1)

    geom = RiemannData(n, metric, one_form, name=f"third-class-eta(m={m}, k={k}, {eta})")
    return ABMetric(geom, PhiSpec(PhiFamily.THIRD_CLASS, m=m, k=k))


def eta_family_parameters(eta: EtaField, m: float) -> ConditionParams:
    """Return the closed-form τ, ρ and μ of the η-family with k = 0.

    ``τ = ∂₁η / (2(m − 1) η²)``, ``ρ_i = m ∂_iη / ((m − 1) η)`` and
    ``μ = −2 b² τ`` with ``b² = η^(−2/(m−1))``.
    """
    _check_exponent(m)

    def tau(x: Sequence[Scalar]) -> Scalar:
        e = eta(x)
        return gradient(eta, x)[0] / (2.0 * (m - 1.0) * e * e)

    def rho(x: Sequence[Scalar]) -> list[Scalar]:
        e = eta(x)
        return [m * d / ((m - 1.0) * e) for d in gradient(eta, x)]

    def mu(x: Sequence[Scalar]) -> Scalar:
        return -2.0 * power(eta(x), -2.0 / (m - 1.0)) * tau(x)

    return ConditionParams(rho=rho, tau=tau, mu=mu)


def make_first_class_kropina(
    geom: RiemannData,
    samples: Sequence[Sample],
    *,
    k: float = 0.0,
    mu: Callable[[Sequence[Scalar]], Scalar] | None = None,
    tolerance: float = 1e-8,
) -> tuple[ABMetric, ConditionParams]:
    """Attach ``φ = k s + 1/s`` to data that satisfies the first-class conditions.

    ρ is produced as ``ρ = (μβ + s_0)/b²``. The data is validated at the given
    samples by the first-class checker, including the r-decomposition with μ.
    ρ, τ and the default μ evaluate on jets, so checkers can differentiate them in x.

    Args:
        geom: The Riemannian data.
        samples: The ``(x, y)`` samples used for validation.
        k (optional): The constant k.
        mu (optional): The scalar field μ. Defaults to the contraction
            ``r_ij b^i b^j / (b² (1 + k b²))``.
        tolerance (optional): The validation tolerance.

    Returns:
        The metric and the condition parameters, with τ = −μ/(2b²).

    Raises:
        ConstraintViolationError: If the data violates the first-class conditions.
    """

    first = [1.0] + [0.0] * (geom.dim - 1)

    def estimated_mu(x: Sequence[Scalar]) -> Scalar:
        bd = beta_apparatus(geom, x, first)
        return contract(bd.b_up, mat_vec(bd.r_ij, bd.b_up)) / (bd.b2 * (1.0 + k * bd.b2))

    mu_field = mu if mu is not None else estimated_mu

    def rho(x: Sequence[Scalar]) -> list[Scalar]:
        bd = beta_apparatus(geom, x, first)
        value = mu_field(x)
        return [(value * bi + si) / bd.b2 for bi, si in zip(geom.one_form(x), bd.s_j)]

    def tau(x: Sequence[Scalar]) -> Scalar:
        return -mu_field(x) / (2.0 * one_form_norm_squared(geom, x))

    params = ConditionParams(rho=rho, tau=tau, mu=mu_field)
    residuals = check_case_i(geom, k, params, samples, tolerance)
    if not residuals.passed:
        raise ConstraintViolationError(
            f"{geom.name or 'Data'} does not satisfy the first-class conditions",
            residuals.residuals,
        )
    _logger.info("Validated first-class data %s: %s", geom.name, residuals)
    return ABMetric(geom, PhiSpec(PhiFamily.FIRST_CLASS, k=k)), params


def deform_m_kropina(g: RiemannData, m: float = -1.0) -> RiemannData:
    """Return the m-Kropina deformation ``α̃ = b^m α``, ``β̃ = b^(m−1) β``.

    In components ``ã_ij = (b²)^m a_ij`` and ``b̃_i = (b²)^((m−1)/2) b_i``.

    Raises:
        DomainError: If b² is not positive at an evaluated point.
    """

    def norm_squared(x: Sequence[Scalar]) -> Scalar:
        value = one_form_norm_squared(g, x)
        if primal(value) <= 0.0:
            raise DomainError(f"b² must be positive, got {primal(value)!r}.")
        return value

    def metric(x: Sequence[Scalar]) -> list[list[Scalar]]:
        factor = power(norm_squared(x), m)
        return [[factor * entry for entry in row] for row in g.metric(x)]

    def one_form(x: Sequence[Scalar]) -> list[Scalar]:
        factor = power(norm_squared(x), 0.5 * (m - 1.0))
        return [factor * bi for bi in g.one_form(x)]

    return RiemannData(g.dim, metric, one_form, name=f"deformed({g.name}, m={m})")


def deform_kropina(g: RiemannData) -> RiemannData:
    """Return the Kropina deformation ``α̃ = α/b``, ``β̃ = β/b²``."""
    return deform_m_kropina(g, -1.0)
