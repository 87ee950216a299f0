"""CaseResiduals data type for abflat.conditions."""

from __future__ import annotations

import math
from collections.abc import Mapping


class CaseResiduals:
    """Per-equation residuals of a case check over a set of samples.

    Each equation tag maps to the largest scaled residual over the samples
    and to the mean. An equation may carry its own tolerance; the others use
    the default tolerance. A check passes when every residual is within its
    tolerance.
    """

    __slots__ = ("case", "tolerance", "_values", "_tolerances")

    def __init__(
        self,
        case: str,
        *,
        tolerance: float,
        tolerances: Mapping[str, float] | None = None,
    ) -> None:
        """Initialize a CaseResiduals instance.

        Args:
            case: The name of the case, for example "iii".
            tolerance: The default tolerance.
            tolerances (optional): Per-equation tolerances that override the default.
        """
        self.case = case
        self.tolerance = tolerance
        self._values: dict[str, list[float]] = {}
        self._tolerances: dict[str, float] = dict(tolerances) if tolerances is not None else {}

    def record(self, tag: str, value: float, tolerance: float | None = None) -> None:
        """Record the residual of one equation at one sample. NaN is recorded as infinity."""
        if math.isnan(value):
            value = math.inf
        if value < 0.0:
            raise ValueError(f"Residual of {tag} must be non-negative, got {value!r}.")
        self._values.setdefault(tag, []).append(value)
        if tolerance is not None:
            self._tolerances[tag] = tolerance

    @property
    def residuals(self) -> dict[str, float]:
        """The largest residual of each equation, by tag."""
        return {tag: max(values) for tag, values in self._values.items()}

    @property
    def mean_residuals(self) -> dict[str, float]:
        """The mean residual of each equation, by tag."""
        return {tag: math.fsum(values) / len(values) for tag, values in self._values.items()}

    def tolerance_for(self, tag: str) -> float:
        """Return the tolerance that applies to an equation."""
        return self._tolerances.get(tag, self.tolerance)

    @property
    def failures(self) -> dict[str, float]:
        """The residuals that exceed their tolerance, by tag."""
        return {
            tag: value for tag, value in self.residuals.items() if value > self.tolerance_for(tag)
        }

    @property
    def passed(self) -> bool:
        """Whether every residual is within its tolerance."""
        return not self.failures

    @property
    def worst(self) -> float:
        """The largest residual over all equations, or 0 if none was recorded."""
        return max(self.residuals.values(), default=0.0)

    def __str__(self) -> str:
        """Return a string representation of the CaseResiduals."""
        details = ", ".join(f"{tag}={value:.3e}" for tag, value in self.residuals.items())
        status = "passed" if self.passed else "failed"
        return f"CaseResiduals(case {self.case} {status}: {details})"
