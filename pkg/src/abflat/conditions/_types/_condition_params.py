"""ConditionParams data type for abflat.conditions."""

from __future__ import annotations

from collections.abc import Callable, Sequence

from abflat.jets import Scalar

CovectorField = Callable[[Sequence[Scalar]], Sequence[Scalar]]
ScalarField = Callable[[Sequence[Scalar]], Scalar]


class ConditionParams:
    """The auxiliary fields ρ, τ and μ that appear in the case conditions.

    ρ is the 1-form ``ρ_i(x) y^i`` and τ and μ are scalar fields. Their
    meaning depends on the case being checked; fields a case does not use
    are ignored.
    """

    __slots__ = ("rho", "tau", "mu")

    def __init__(
        self,
        *,
        rho: CovectorField,
        tau: ScalarField | None = None,
        mu: ScalarField | None = None,
    ) -> None:
        """Initialize a ConditionParams instance.

        Args:
            rho: A function returning the components ``ρ_i(x)``.
            tau (optional): The scalar field τ(x). Defaults to zero.
            mu (optional): The scalar field μ(x) of the first class, if known.
        """
        self.rho = rho
        self.tau: ScalarField = tau if tau is not None else _zero_scalar
        self.mu = mu

    @staticmethod
    def zero(n: int) -> "ConditionParams":
        """Return parameters with ρ = 0 and τ = 0 in dimension n."""
        return ConditionParams(rho=lambda x: [0.0] * n, tau=_zero_scalar)

    def with_rho_offset(self, offset: Sequence[float]) -> "ConditionParams":
        """Return a copy whose ρ is shifted by a constant covector."""
        rho = self.rho
        return ConditionParams(
            rho=lambda x: [ri + oi for ri, oi in zip(rho(x), offset)],
            tau=self.tau,
            mu=self.mu,
        )

    def __str__(self) -> str:
        """Return a string representation of the ConditionParams."""
        return f"ConditionParams(mu={'set' if self.mu is not None else 'unset'})"


def _zero_scalar(x: Sequence[Scalar]) -> Scalar:
    return 0.0
