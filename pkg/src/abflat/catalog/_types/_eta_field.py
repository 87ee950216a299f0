"""EtaField data type for abflat.catalog."""

from __future__ import annotations

from collections.abc import Callable, Sequence

from abflat._errors import DomainError
from abflat.jets import Scalar, cos, primal, sin


class EtaField:
    """A positive scalar field η(x) used to build families of (α,β)-data.

    The default field is ``η(x) = 1 + A sin(ω x¹) cos(ω x²)``, which stays
    positive whenever ``|A| < 1``. A custom jet-aware function may be supplied
    instead.
    """

    __slots__ = ("amplitude", "frequency", "_function")

    def __init__(
        self,
        *,
        amplitude: float = 0.3,
        frequency: float = 1.0,
        function: Callable[[Sequence[Scalar]], Scalar] | None = None,
    ) -> None:
        """Initialize an EtaField instance.

        Args:
            amplitude (optional): The amplitude A of the default field.
            frequency (optional): The angular frequency ω of the default field.
            function (optional): A custom field, replacing the default one.

        Raises:
            ValueError: If the default field could vanish, that is ``|A| ≥ 1``.
        """
        if function is None and abs(amplitude) >= 1.0:
            raise ValueError(
                f"Amplitude must satisfy |A| < 1 to keep η positive, got {amplitude!r}."
            )
        self.amplitude = float(amplitude)
        self.frequency = float(frequency)
        self._function = function

    def __call__(self, x: Sequence[Scalar]) -> Scalar:
        """Evaluate η at a point of dimension at least 1.

        Raises:
            DomainError: If η is not positive at the point.
        """
        if self._function is not None:
            value = self._function(x)
        else:
            w = self.frequency
            second = cos(w * x[1]) if len(x) > 1 else 1.0
            value = 1.0 + self.amplitude * sin(w * x[0]) * second
        if primal(value) <= 0.0:
            raise DomainError(f"η must be positive, got {primal(value)!r}.")
        return value

    def __str__(self) -> str:
        """Return a string representation of the EtaField."""
        if self._function is not None:
            return "EtaField(custom)"
        return f"EtaField(1 + {self.amplitude} sin({self.frequency} x¹) cos({self.frequency} x²))"
