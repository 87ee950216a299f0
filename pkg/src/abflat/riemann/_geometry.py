"""Christoffel symbols, sprays, curvature and β-derivatives of Riemannian data.

Every function is generic over real numbers and jets: it returns float arrays
for a real point and object arrays when the point carries jets, so each
quantity can itself be differentiated by lifting its evaluation.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any

import numpy as np
import numpy.typing as npt

from abflat.jets import Scalar, as_real_array, directional_derivatives, primal_array
from abflat.riemann._linalg import invert
from abflat.riemann._types._beta_derivatives import BetaDerivatives
from abflat.riemann._types._riemann_data import (
    RiemannData,
    contract,
    mat_vec,
    quadratic_form,
)

_logger = logging.getLogger(__name__)


def _unit(n: int, k: int) -> list[float]:
    return [1.0 if i == k else 0.0 for i in range(n)]


def _metric_derivatives(g: RiemannData, x: Sequence[Scalar]) -> list[npt.NDArray[Any]]:
    return [
        directional_derivatives(g.metric, x, _unit(g.dim, k))[1] for k in range(g.dim)
    ]


def _christoffel(
    g: RiemannData, x: Sequence[Scalar], a_inv: npt.NDArray[Any]
) -> npt.NDArray[Any]:
    n = g.dim
    da = _metric_derivatives(g, x)
    gamma = np.empty((n, n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            for k in range(j, n):
                total: Scalar = 0.0
                for l in range(n):
                    total = total + a_inv[i, l] * (da[j][l, k] + da[k][j, l] - da[l][j, k])
                gamma[i, j, k] = 0.5 * total
                gamma[i, k, j] = gamma[i, j, k]
    return gamma


def christoffel(g: RiemannData, x: Sequence[Scalar]) -> npt.NDArray[Any]:
    """Return the Christoffel symbols ``Γ^i_jk(x)`` of α.

    The result is indexed ``[i, j, k]`` and is exactly symmetric in ``j, k``.

    Raises:
        SingularMatrixError: If ``a_ij(x)`` is numerically singular.
    """
    a_inv = invert(g.metric(x), "Metric a_ij")
    return as_real_array(_christoffel(g, x, a_inv))


def _spray(gamma: npt.NDArray[Any], y: Sequence[Scalar]) -> npt.NDArray[Any]:
    n = len(y)
    spray = np.empty(n, dtype=object)
    for i in range(n):
        total: Scalar = 0.0
        for j in range(n):
            total = total + contract(gamma[i, j], y) * y[j]
        spray[i] = 0.5 * total
    return spray


def spray_riemann(g: RiemannData, x: Sequence[Scalar], y: Sequence[Scalar]) -> npt.NDArray[Any]:
    """Return the geodesic spray ``G^i_α = ½ Γ^i_jk y^j y^k`` of α."""
    return as_real_array(_spray(christoffel(g, x), y))


def _covariant_derivative(
    g: RiemannData, x: Sequence[Scalar], gamma: npt.NDArray[Any]
) -> npt.NDArray[Any]:
    n = g.dim
    b = g.one_form(x)
    db = [directional_derivatives(g.one_form, x, _unit(n, j))[1] for j in range(n)]
    result = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            result[i, j] = db[j][i] - contract(b, gamma[:, i, j])
    return result


def covariant_derivative_beta(g: RiemannData, x: Sequence[Scalar]) -> npt.NDArray[Any]:
    """Return ``b_{i|j} = ∂_j b_i − b_k Γ^k_ij``, indexed ``[i, j]``."""
    return as_real_array(_covariant_derivative(g, x, christoffel(g, x)))


class _Apparatus:
    """Shared per-point quantities for the β-apparatus and structured sprays."""

    __slots__ = ("a", "a_inv", "gamma", "b", "beta_derivatives")

    def __init__(self, g: RiemannData, x: Sequence[Scalar], y: Sequence[Scalar]) -> None:
        n = g.dim
        self.a = g.metric(x)
        self.a_inv = invert(self.a, "Metric a_ij")
        self.gamma = _christoffel(g, x, self.a_inv)
        self.b = g.one_form(x)
        b_ij = _covariant_derivative(g, x, self.gamma)
        r_ij = np.empty((n, n), dtype=object)
        s_ij = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                r_ij[i, j] = 0.5 * (b_ij[i, j] + b_ij[j, i])
                s_ij[i, j] = 0.5 * (b_ij[i, j] - b_ij[j, i])
        b_up = mat_vec(self.a_inv, self.b)
        s_j = np.array([contract(b_up, s_ij[:, j]) for j in range(n)], dtype=object)
        s_up = mat_vec(self.a_inv, s_j)
        s_mixed = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                s_mixed[i, j] = contract(self.a_inv[i], s_ij[:, j])
        self.beta_derivatives = BetaDerivatives(
            b_ij=b_ij,
            r_ij=r_ij,
            s_ij=s_ij,
            b_up=b_up,
            b2=contract(self.b, b_up),
            s_j=s_j,
            s_up=s_up,
            s_mixed=s_mixed,
            s_mixed0=mat_vec(s_mixed, y),
            r00=quadratic_form(r_ij, y),
            s0=contract(s_j, y),
        )


def beta_apparatus(g: RiemannData, x: Sequence[Scalar], y: Sequence[Scalar]) -> BetaDerivatives:
    """Return the covariant derivative of β and the tensors derived from it.

    These are ``b_{i|j}``, ``r_ij``, ``s_ij``, ``s_j``, ``s^i``, ``s^i_0``, ``r_00``, ``s_0``
    and ``b²``.

    Raises:
        SingularMatrixError: If ``a_ij(x)`` is numerically singular.
    """
    derivatives = _Apparatus(g, x, y).beta_derivatives
    for name in ("b_ij", "r_ij", "s_ij", "b_up", "s_j", "s_up", "s_mixed", "s_mixed0"):
        setattr(derivatives, name, as_real_array(getattr(derivatives, name)))
    return derivatives


def _christoffel_derivatives(g: RiemannData, x: Sequence[Scalar]) -> list[npt.NDArray[Any]]:
    return [
        directional_derivatives(lambda z: christoffel(g, z), x, _unit(g.dim, k))[1]
        for k in range(g.dim)
    ]


def riemann_curvature(g: RiemannData, x: Sequence[Scalar]) -> npt.NDArray[Any]:
    """Return the Riemann tensor ``R^i_jkl`` of α, indexed ``[i, j, k, l]``.

    ``R^i_jkl = ∂_k Γ^i_jl − ∂_l Γ^i_jk + Γ^i_km Γ^m_jl − Γ^i_lm Γ^m_jk``. The
    tensor is exactly antisymmetric in ``k, l``.
    """
    n = g.dim
    gamma = christoffel(g, x)
    d_gamma = _christoffel_derivatives(g, x)
    curvature = np.zeros((n, n, n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(k + 1, n):
                    value = d_gamma[k][i, j, l] - d_gamma[l][i, j, k]
                    for m in range(n):
                        value = value + gamma[i, k, m] * gamma[m, j, l]
                        value = value - gamma[i, l, m] * gamma[m, j, k]
                    curvature[i, j, k, l] = value
                    curvature[i, j, l, k] = -value
    return as_real_array(curvature)


def sectional_curvature(g: RiemannData, x: Sequence[Scalar], i: int = 0, j: int = 1) -> Scalar:
    """Return the sectional curvature of α on the plane spanned by ``∂_i`` and ``∂_j``."""
    a = g.metric(x)
    curvature = riemann_curvature(g, x)
    numerator = contract(a[i], curvature[:, j, i, j])
    return numerator / (a[i, i] * a[j, j] - a[i, j] * a[i, j])


def metric_compatibility_residual(g: RiemannData, x: Sequence[Scalar]) -> float:
    """Return ``max |∂_k a_ij − Γ^l_ki a_lj − Γ^l_kj a_il|``.

    It vanishes for a Levi-Civita connection.
    """
    n = g.dim
    a = g.metric(x)
    gamma = christoffel(g, x)
    da = _metric_derivatives(g, x)
    residual = np.empty((n, n, n), dtype=object)
    for k in range(n):
        for i in range(n):
            for j in range(n):
                residual[k, i, j] = (
                    da[k][i, j] - contract(gamma[:, k, i], a[:, j]) - contract(gamma[:, k, j], a[i])
                )
    return float(np.max(np.abs(primal_array(residual))))


def one_form_norm_squared(g: RiemannData, x: Sequence[Scalar]) -> Scalar:
    """Return ``b² = a^ij b_i b_j``, jet-aware so that its gradient can be taken."""
    b = g.one_form(x)
    return contract(b, mat_vec(invert(g.metric(x), "Metric a_ij"), b))
