"""CheckResult data type for abflat.harness."""

from __future__ import annotations

import math
from collections.abc import Mapping
from typing import Any, Literal

from abflat.harness._types._outcome import Outcome

Comparison = Literal["<=", ">="]


def _report_number(value: float) -> float | str:
    """Return a finite value unchanged and a non-finite one as its JSON-safe name."""
    if math.isfinite(value):
        return value
    if math.isnan(value):
        return "NaN"
    return "Infinity" if value > 0.0 else "-Infinity"


class CheckResult:
    """The aggregated result of one check of a verification suite.

    A check evaluates one residual or witness value at every sample. Its
    result holds the maximum and mean over the evaluated samples, the
    threshold they are compared against and the resulting outcome. With the
    comparison ``"<="`` the maximum residual must not exceed the threshold;
    with ``">="`` the maximum is a witness that must reach it.
    """

    __slots__ = (
        "name",
        "equation",
        "max_residual",
        "mean_residual",
        "samples",
        "threshold",
        "comparison",
        "outcome",
    )

    def __init__(
        self,
        name: str,
        *,
        equation: str = "",
        max_residual: float = 0.0,
        mean_residual: float = 0.0,
        samples: int = 0,
        threshold: float = 0.0,
        comparison: Comparison = "<=",
        outcome: Outcome = Outcome.UNSPECIFIED,
    ) -> None:
        """Initialize a CheckResult instance.

        Args:
            name: Human-readable name of the check.
            equation (optional): The relation the check evaluates.
            max_residual (optional): The maximum over the evaluated samples.
            mean_residual (optional): The mean over the evaluated samples.
            samples (optional): The number of evaluated samples.
            threshold (optional): The threshold of the comparison.
            comparison (optional): "<=" for residuals or ">=" for witnesses.
            outcome (optional): The outcome of the check (PASSED, FAILED,
                INDETERMINATE, or UNSPECIFIED).
        """
        self.name = name
        self.equation = equation
        self.max_residual = max_residual
        self.mean_residual = mean_residual
        self.samples = samples
        self.threshold = threshold
        self.comparison = comparison
        self.outcome = outcome

    @property
    def passed(self) -> bool:
        """Whether the check passed."""
        return self.outcome is Outcome.PASSED

    @staticmethod
    def from_dict(value: Mapping[str, Any]) -> "CheckResult":
        """Create a CheckResult instance from its report representation.

        Raises:
            ValueError: If the comparison or outcome is unknown.
        """
        comparison = value["comparison"]
        if comparison not in ("<=", ">="):
            raise ValueError(f"Unknown comparison: {comparison!r}")
        return CheckResult(
            name=str(value["name"]),
            equation=str(value["eq"]),
            max_residual=float(value["max_residual"]),
            mean_residual=float(value["mean_residual"]),
            samples=int(value["samples"]),
            threshold=float(value["threshold"]),
            comparison=comparison,
            outcome=Outcome.from_name(value["outcome"]),
        )

    def to_dict(self) -> dict[str, Any]:
        """Convert this CheckResult instance to its report representation.

        Non-finite values are written as the strings ``"Infinity"``,
        ``"-Infinity"`` and ``"NaN"``, which :meth:`from_dict` reads back.
        """
        return {
            "name": self.name,
            "eq": self.equation,
            "max_residual": _report_number(self.max_residual),
            "mean_residual": _report_number(self.mean_residual),
            "samples": self.samples,
            "threshold": _report_number(self.threshold),
            "comparison": self.comparison,
            "outcome": self.outcome.to_name(),
            "pass": self.passed,
        }

    def __eq__(self, other: object) -> bool:
        """Determine equality."""
        if not isinstance(other, CheckResult):
            return NotImplemented
        return (
            self.name == other.name
            and self.equation == other.equation
            and self.max_residual == other.max_residual
            and self.mean_residual == other.mean_residual
            and self.samples == other.samples
            and self.threshold == other.threshold
            and self.comparison == other.comparison
            and self.outcome == other.outcome
        )

    def __str__(self) -> str:
        """Return a string representation of the CheckResult."""
        return (
            f"{self.name}: max={self.max_residual:.3e} mean={self.mean_residual:.3e} "
            f"{self.comparison} {self.threshold:.1e} over {self.samples} samples "
            f"-> {self.outcome.to_name()}"
        )
