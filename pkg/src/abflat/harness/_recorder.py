"""Aggregation of per-sample check values and incidents while a suite runs."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator
from contextlib import contextmanager

from abflat._errors import AbflatError
from abflat.harness._types._check_result import CheckResult, Comparison
from abflat.harness._types._incident import Incident
from abflat.harness._types._outcome import Outcome
from abflat.harness._types._suite_config import SuiteConfig

_logger = logging.getLogger(__name__)


class _Check:
    __slots__ = ("name", "equation", "threshold", "comparison", "values")

    def __init__(self, name: str, equation: str, threshold: float, comparison: Comparison) -> None:
        self.name = name
        self.equation = equation
        self.threshold = threshold
        self.comparison = comparison
        self.values: list[float] = []

    def result(self) -> CheckResult:
        if not self.values:
            return CheckResult(
                self.name,
                equation=self.equation,
                threshold=self.threshold,
                comparison=self.comparison,
                outcome=Outcome.INDETERMINATE,
            )
        worst = max(self.values)
        if self.comparison == "<=":
            passed = worst <= self.threshold
        else:
            passed = worst >= self.threshold
        return CheckResult(
            self.name,
            equation=self.equation,
            max_residual=worst,
            mean_residual=math.fsum(self.values) / len(self.values),
            samples=len(self.values),
            threshold=self.threshold,
            comparison=self.comparison,
            outcome=Outcome.PASSED if passed else Outcome.FAILED,
        )


class SuiteRecorder:
    """Collects the values of every check and the incidents of a suite run.

    Checks are declared once with their relation, tolerance class and
    comparison, then receive one value per evaluated sample. Errors raised
    while a sample is evaluated become incidents instead of aborting the run.
    """

    __slots__ = ("_config", "_checks", "_incidents")

    def __init__(self, config: SuiteConfig) -> None:
        """Initialize a SuiteRecorder for a configuration, whose tolerances it applies."""
        self._config = config
        self._checks: dict[str, _Check] = {}
        self._incidents: list[Incident] = []

    def declare(
        self,
        name: str,
        equation: str,
        tolerance: str,
        comparison: Comparison = "<=",
    ) -> None:
        """Declare a check so it is reported even if no sample can be evaluated.

        Args:
            name: The name of the check.
            equation: The relation the check evaluates.
            tolerance: The tolerance class that sets the threshold.
            comparison (optional): "<=" for residuals or ">=" for witnesses.

        Raises:
            KeyError: If the tolerance class is unknown.
        """
        if name not in self._checks:
            threshold = self._config.tolerance(tolerance)
            self._checks[name] = _Check(name, equation, threshold, comparison)

    def record(self, name: str, value: float) -> None:
        """Record the value of a declared check at one sample. NaN is recorded as infinity.

        Raises:
            KeyError: If the check was not declared.
        """
        if math.isnan(value):
            value = math.inf
        self._checks[name].values.append(float(value))

    @contextmanager
    def sample(self, index: int, source: str) -> Iterator[None]:
        """Evaluate one sample, turning engine and arithmetic errors into incidents."""
        try:
            yield
        except (AbflatError, ArithmeticError) as e:
            incident = Incident.from_exception(e, sample_index=index, source=source)
            _logger.debug("Incident %s", incident)
            self._incidents.append(incident)

    @property
    def incidents(self) -> list[Incident]:
        """The incidents recorded so far."""
        return list(self._incidents)

    def results(self) -> list[CheckResult]:
        """Return the result of every declared check, in declaration order."""
        return [check.result() for check in self._checks.values()]
