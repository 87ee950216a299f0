"""RiemannData type for abflat.riemann."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from typing import Any

import numpy as np
import numpy.typing as npt

from abflat._errors import DimensionError
from abflat.jets import Scalar, sqrt

MetricField = Callable[[Sequence[Scalar]], Any]
"""A function returning the ``n × n`` matrix ``a_ij(x)``."""

OneFormField = Callable[[Sequence[Scalar]], Any]
"""A function returning the ``n`` components ``b_i(x)``."""


class RiemannData:
    """A Riemannian metric α and a 1-form β on an open subset of Rⁿ.

    Both fields are plain callables of the point. They must be built from
    jet-aware arithmetic and the primitives in :mod:`abflat.jets` so every
    derivative the engine needs can be taken by jet evaluation.
    """

    __slots__ = ("dim", "name", "_metric", "_one_form")

    def __init__(
        self,
        dim: int,
        metric: MetricField,
        one_form: OneFormField,
        *,
        name: str = "",
    ) -> None:
        """Initialize a RiemannData instance.

        Args:
            dim: The dimension n of the domain, at least 2.
            metric: A function returning the symmetric positive-definite ``a_ij(x)``.
            one_form: A function returning ``b_i(x)``.
            name (optional): A human-readable label used in logs and reports.

        Raises:
            DimensionError: If ``dim`` is less than 2.
        """
        if dim < 2:
            raise DimensionError(f"Dimension must be at least 2, got {dim}.")
        self.dim = dim
        self.name = name
        self._metric = metric
        self._one_form = one_form

    def metric(self, x: Sequence[Scalar]) -> npt.NDArray[Any]:
        """Return ``a_ij(x)`` as an ``n × n`` object array."""
        a = np.asarray(self._metric(x), dtype=object)
        if a.shape != (self.dim, self.dim):
            raise ValueError(f"Metric returned shape {a.shape}, expected {(self.dim, self.dim)}.")
        return a

    def one_form(self, x: Sequence[Scalar]) -> npt.NDArray[Any]:
        """Return ``b_i(x)`` as an object array of length n."""
        b = np.asarray(self._one_form(x), dtype=object)
        if b.shape != (self.dim,):
            raise ValueError(f"One-form returned shape {b.shape}, expected {(self.dim,)}.")
        return b

    def alpha(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
        """Return ``α(x, y) = √(a_ij y^i y^j)``."""
        return sqrt(quadratic_form(self.metric(x), y))

    def beta(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
        """Return ``β(x, y) = b_i y^i``."""
        return contract(self.one_form(x), y)

    def __str__(self) -> str:
        """Return a string representation of the RiemannData."""
        return f"RiemannData(dim={self.dim}, name={self.name!r})"


def contract(u: Sequence[Scalar] | npt.NDArray[Any], v: Sequence[Scalar]) -> Scalar:
    """Return ``Σ u_i v^i`` with jet-aware arithmetic."""
    total: Scalar = 0.0
    for ui, vi in zip(u, v):
        total = total + ui * vi
    return total


def quadratic_form(a: npt.NDArray[Any], y: Sequence[Scalar]) -> Scalar:
    """Return ``Σ a_ij y^i y^j`` with jet-aware arithmetic."""
    n = len(y)
    total: Scalar = 0.0
    for i in range(n):
        row: Scalar = 0.0
        for j in range(n):
            row = row + a[i, j] * y[j]
        total = total + row * y[i]
    return total


def mat_vec(a: npt.NDArray[Any], v: Sequence[Scalar]) -> npt.NDArray[Any]:
    """Return ``a v`` as an object array with jet-aware arithmetic."""
    n = a.shape[0]
    return np.array([contract(a[i], v) for i in range(n)], dtype=object)
