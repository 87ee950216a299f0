"""BetaDerivatives type for abflat.riemann."""

from __future__ import annotations

from typing import Any

import numpy.typing as npt

from abflat.jets import Scalar


class BetaDerivatives:
    """The covariant-derivative apparatus of a 1-form β at a point and a direction.

    Index conventions: ``b_ij`` is ``b_{i|j}``, ``r_ij`` and ``s_ij`` are its
    symmetric and antisymmetric parts, ``s_j = b^i s_ij``, ``s^i = a^ij s_j``,
    ``s^i_j = a^ik s_kj``, and a subscript 0 means contraction with y.
    """

    __slots__ = (
        "b_ij",
        "r_ij",
        "s_ij",
        "b_up",
        "b2",
        "s_j",
        "s_up",
        "s_mixed",
        "s_mixed0",
        "r00",
        "s0",
    )

    def __init__(
        self,
        *,
        b_ij: npt.NDArray[Any],
        r_ij: npt.NDArray[Any],
        s_ij: npt.NDArray[Any],
        b_up: npt.NDArray[Any],
        b2: Scalar,
        s_j: npt.NDArray[Any],
        s_up: npt.NDArray[Any],
        s_mixed: npt.NDArray[Any],
        s_mixed0: npt.NDArray[Any],
        r00: Scalar,
        s0: Scalar,
    ) -> None:
        """Initialize a BetaDerivatives instance.

        Args:
            b_ij: The covariant derivative ``b_{i|j}``.
            r_ij: The symmetric part of ``b_{i|j}``.
            s_ij: The antisymmetric part of ``b_{i|j}``.
            b_up: The raised 1-form ``b^i``.
            b2: The squared α-norm ``b² = b_i b^i``.
            s_j: The contraction ``b^i s_ij``.
            s_up: The raised ``s^i``.
            s_mixed: The mixed tensor ``s^i_j``.
            s_mixed0: The vector ``s^i_0``.
            r00: The quadratic form ``r_ij y^i y^j``.
            s0: The linear form ``s_j y^j``.
        """
        self.b_ij = b_ij
        self.r_ij = r_ij
        self.s_ij = s_ij
        self.b_up = b_up
        self.b2 = b2
        self.s_j = s_j
        self.s_up = s_up
        self.s_mixed = s_mixed
        self.s_mixed0 = s_mixed0
        self.r00 = r00
        self.s0 = s0

    def __str__(self) -> str:
        """Return a string representation of the BetaDerivatives."""
        return f"BetaDerivatives(b2={self.b2!r}, r00={self.r00!r}, s0={self.s0!r})"
