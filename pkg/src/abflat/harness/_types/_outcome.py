"""Outcome data type for abflat.harness."""

from __future__ import annotations

from collections.abc import Iterable
from enum import IntEnum


class Outcome(IntEnum):
    """Represents the outcome of a check or of a whole suite.

    The Outcome enum indicates whether a check passed, failed, or had an
    indeterminate result because no sample could be evaluated.
    """

    UNSPECIFIED = 0
    """The outcome is not specified or unknown."""

    PASSED = 1
    """Every evaluated sample met the threshold."""

    FAILED = 2
    """At least one evaluated sample missed the threshold."""

    INDETERMINATE = 3
    """No sample could be evaluated."""

    @classmethod
    def from_name(cls, name: str) -> "Outcome":
        """Create an Outcome instance from its lower-case report name.

        Args:
            name: The report name, for example "passed".

        Returns:
            The corresponding Outcome enum value.

        Raises:
            ValueError: If the name doesn't correspond to a known Outcome.
        """
        try:
            return cls[name.upper()]
        except KeyError as e:
            raise ValueError(f"Unknown outcome name: {name}") from e

    def to_name(self) -> str:
        """Convert this Outcome instance to its lower-case report name."""
        return self.name.lower()

    @classmethod
    def combine(cls, outcomes: Iterable["Outcome"]) -> "Outcome":
        """Return the overall outcome of several checks.

        FAILED wins over INDETERMINATE, which wins over PASSED. No outcomes at
        all combine to PASSED.
        """
        seen = set(outcomes)
        if cls.FAILED in seen:
            return cls.FAILED
        if cls.INDETERMINATE in seen or cls.UNSPECIFIED in seen:
            return cls.INDETERMINATE
        return cls.PASSED
