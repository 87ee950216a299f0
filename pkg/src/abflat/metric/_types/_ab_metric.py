"""ABMetric data type for abflat.metric."""

from __future__ import annotations

from abflat.metric._types._phi_spec import PhiSpec
from abflat.riemann import RiemannData


class ABMetric:
    """An (α,β)-metric ``F = α φ(β/α)`` built from Riemannian data and a profile.

    Positivity of F is not assumed; it is checked on each sample.
    """

    __slots__ = ("geom", "phi")

    def __init__(self, geom: RiemannData, phi: PhiSpec) -> None:
        """Initialize an ABMetric instance.

        Args:
            geom: The Riemannian metric α and the 1-form β.
            phi: The profile φ.
        """
        self.geom = geom
        self.phi = phi

    @property
    def dim(self) -> int:
        """The dimension of the domain."""
        return self.geom.dim

    def __str__(self) -> str:
        """Return a string representation of the ABMetric."""
        return f"ABMetric({self.geom.name or 'unnamed'}, {self.phi})"
