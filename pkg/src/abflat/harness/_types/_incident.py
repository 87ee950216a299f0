"""Incident data type for abflat.harness."""

from __future__ import annotations

from collections.abc import Mapping
from typing import Any


class Incident:
    """Represents a sample that could not be evaluated.

    An Incident contains the index of the sample, the type of the error that
    was raised, a descriptive message, and the check or suite in which it
    happened, to help identify samples that hit a singular locus.
    """

    __slots__ = (
        "sample_index",
        "error_type",
        "message",
        "source",
    )

    def __init__(
        self,
        *,
        sample_index: int = -1,
        error_type: str = "",
        message: str = "",
        source: str = "",
    ) -> None:
        """Initialize an Incident instance.

        Args:
            sample_index: The index of the sample, or -1 if not tied to one sample.
            error_type: The name of the exception type that was raised.
            message: A descriptive message explaining the error.
            source: The part of the suite in which the error occurred.
        """
        self.sample_index = sample_index
        self.error_type = error_type
        self.message = message
        self.source = source

    @staticmethod
    def from_exception(
        error: BaseException, *, sample_index: int = -1, source: str = ""
    ) -> "Incident":
        """Create an Incident instance from a raised exception."""
        return Incident(
            sample_index=sample_index,
            error_type=type(error).__name__,
            message=str(error),
            source=source,
        )

    @staticmethod
    def from_dict(value: Mapping[str, Any]) -> "Incident":
        """Create an Incident instance from its report representation."""
        return Incident(
            sample_index=int(value["sample_index"]),
            error_type=str(value["error_type"]),
            message=str(value["message"]),
            source=str(value["source"]),
        )

    def to_dict(self) -> dict[str, Any]:
        """Convert this Incident instance to its report representation."""
        return {
            "sample_index": self.sample_index,
            "error_type": self.error_type,
            "message": self.message,
            "source": self.source,
        }

    def __eq__(self, other: object) -> bool:
        """Determine equality."""
        if not isinstance(other, Incident):
            return NotImplemented
        return (
            self.sample_index == other.sample_index
            and self.error_type == other.error_type
            and self.message == other.message
            and self.source == other.source
        )

    def __str__(self) -> str:
        """Return a string representation of the Incident."""
        return f"[{self.source} #{self.sample_index}] {self.error_type}: {self.message}"
