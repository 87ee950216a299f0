"""SprayResult data type for abflat.metric."""

from __future__ import annotations

from typing import Any

import numpy.typing as npt


class SprayResult:
    """Spray coefficients together with their projective factor, when one exists."""

    __slots__ = ("G", "P", "antisym_residual")

    def __init__(
        self, G: npt.NDArray[Any], *, P: float | None = None, antisym_residual: float = 0.0
    ) -> None:
        """Initialize a SprayResult instance.

        Args:
            G: The spray coefficients ``G^i``.
            P (optional): The projective factor, present only when ``G^i = P y^i``
                within tolerance.
            antisym_residual (optional): ``max_{i<j} |G^i y^j − G^j y^i| / (1 + |G||y|)``.
        """
        self.G = G
        self.P = P
        self.antisym_residual = antisym_residual

    @property
    def is_projectively_flat(self) -> bool:
        """Whether a projective factor was extracted."""
        return self.P is not None

    def __str__(self) -> str:
        """Return a string representation of the SprayResult."""
        return f"SprayResult(G={list(self.G)}, P={self.P}, residual={self.antisym_residual:.3e})"
