"""SuiteReport data type for abflat.harness."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from typing import Any

from abflat.harness._types._check_result import CheckResult
from abflat.harness._types._incident import Incident
from abflat.harness._types._outcome import Outcome

SCHEMA_VERSION = 1


class SuiteReport:
    """The result of running one verification suite.

    Holds the echo of the configuration that was run, one CheckResult per
    check, the incidents of samples that could not be evaluated, the engine
    version and the wall time. The suite passes exactly when every check
    passes; incidents alone never fail a suite.
    """

    __slots__ = (
        "suite",
        "_config",
        "_checks",
        "_incidents",
        "engine_version",
        "runtime_ms",
        "schema_version",
    )

    @property
    def config(self) -> Mapping[str, Any]:
        """The echo of the configuration that was run."""
        return self._config

    @property
    def checks(self) -> list[CheckResult]:
        """The check results, in the order the suite defines them."""
        return self._checks

    @property
    def incidents(self) -> list[Incident]:
        """The samples that could not be evaluated."""
        return self._incidents

    def __init__(
        self,
        suite: str,
        *,
        config: Mapping[str, Any] | None = None,
        checks: Iterable[CheckResult] | None = None,
        incidents: Iterable[Incident] | None = None,
        engine_version: str = "",
        runtime_ms: float = 0.0,
        schema_version: int = SCHEMA_VERSION,
    ) -> None:
        """Initialize a SuiteReport instance.

        Args:
            suite: The identifier of the suite.
            config (optional): The echo of the configuration that was run.
            checks (optional): The check results.
            incidents (optional): The samples that could not be evaluated.
            engine_version (optional): The version of the engine that ran the suite.
            runtime_ms (optional): The wall time of the run in milliseconds.
            schema_version (optional): The version of the report schema.
        """
        self.suite = suite
        self._config: dict[str, Any] = dict(config) if config is not None else {}
        self._checks: list[CheckResult] = list(checks) if checks is not None else []
        self._incidents: list[Incident] = list(incidents) if incidents is not None else []
        self.engine_version = engine_version
        self.runtime_ms = runtime_ms
        self.schema_version = schema_version

    @property
    def outcome(self) -> Outcome:
        """The combined outcome of every check."""
        return Outcome.combine(check.outcome for check in self._checks)

    @property
    def passed(self) -> bool:
        """Whether every check passed."""
        return self.outcome is Outcome.PASSED

    @staticmethod
    def from_dict(value: Mapping[str, Any]) -> "SuiteReport":
        """Create a SuiteReport instance from its report representation."""
        return SuiteReport(
            suite=str(value["suite"]),
            config=value["config"],
            checks=[CheckResult.from_dict(check) for check in value["checks"]],
            incidents=[Incident.from_dict(incident) for incident in value["incidents"]],
            engine_version=str(value["engine_version"]),
            runtime_ms=float(value["runtime_ms"]),
            schema_version=int(value["schema_version"]),
        )

    def to_dict(self) -> dict[str, Any]:
        """Convert this SuiteReport instance to its report representation, in a fixed key order."""
        return {
            "schema_version": self.schema_version,
            "suite": self.suite,
            "config": self._config,
            "checks": [check.to_dict() for check in self._checks],
            "incidents": [incident.to_dict() for incident in self._incidents],
            "pass": self.passed,
            "engine_version": self.engine_version,
            "runtime_ms": self.runtime_ms,
        }

    def __eq__(self, other: object) -> bool:
        """Determine equality, ignoring the wall time."""
        if not isinstance(other, SuiteReport):
            return NotImplemented
        return (
            self.suite == other.suite
            and self.config == other.config
            and self.checks == other.checks
            and self.incidents == other.incidents
            and self.engine_version == other.engine_version
            and self.schema_version == other.schema_version
        )

    def __str__(self) -> str:
        """Return a string representation of the SuiteReport."""
        return (
            f"SuiteReport({self.suite}: {self.outcome.to_name()}, {len(self._checks)} checks, "
            f"{len(self._incidents)} incidents)"
        )
