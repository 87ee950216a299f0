"""SuiteConfig data type for abflat.harness."""

from __future__ import annotations

import json
import logging
import math
from collections.abc import Mapping, Sequence
from pathlib import Path
from typing import Any

from abflat._errors import ConfigurationError

_logger = logging.getLogger(__name__)

DEFAULT_TOLERANCES: Mapping[str, float] = {
    "algebraic": 1e-10,
    "identity": 1e-12,
    "first_derivative": 1e-8,
    "spray": 1e-7,
    "projective": 1e-8,
    "flatness": 1e-9,
    "curvature": 1e-5,
    "nonflat": 1e-3,
    "ode": 1e-6,
}
"""The tolerance ladder: the default threshold of every residual class."""

PARAMETER_KEYS = frozenset(
    {"m", "k", "a_vec", "sign", "b", "b_vec", "k1", "k2", "phi", "eta_amplitude", "eta_frequency"}
)
_CONFIG_KEYS = frozenset({"suite", "dim", "samples", "seed", "tol", "domain", "params"})

Domain = tuple[tuple[float, float], ...]


def _as_int(name: str, value: Any, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigurationError(f"{name} must be an integer, got {value!r}.")
    if value < minimum:
        raise ConfigurationError(f"{name} must be at least {minimum}, got {value}.")
    return value


def _as_domain(value: Any, dim: int) -> Domain:
    if not isinstance(value, Sequence) or len(value) != dim:
        raise ConfigurationError(f"domain must list {dim} intervals, got {value!r}.")
    domain = []
    for interval in value:
        if not isinstance(interval, Sequence) or len(interval) != 2:
            raise ConfigurationError(f"Each domain interval must be [low, high], got {interval!r}.")
        low, high = (float(bound) for bound in interval)
        if not low < high:
            raise ConfigurationError(f"Domain interval [{low}, {high}] is empty.")
        domain.append((low, high))
    return tuple(domain)


class SuiteConfig:
    """The configuration of one run of a verification suite.

    A configuration names the suite, the dimension, the number of samples and
    the RNG seed, the sample box for x, tolerance overrides by residual class
    and the parameters of the metric under test. Unset fields fall back to the
    tolerance ladder and to the suite's own defaults.
    """

    __slots__ = ("suite", "dim", "samples", "seed", "_tolerances", "domain", "_params")

    @property
    def tolerances(self) -> Mapping[str, float]:
        """The tolerance of every residual class, with overrides applied."""
        return self._tolerances

    @property
    def params(self) -> Mapping[str, Any]:
        """The parameters of the metric under test."""
        return self._params

    def __init__(
        self,
        suite: str,
        *,
        dim: int = 2,
        samples: int = 200,
        seed: int = 1,
        tolerances: Mapping[str, float] | None = None,
        domain: Sequence[Sequence[float]] | None = None,
        params: Mapping[str, Any] | None = None,
    ) -> None:
        """Initialize a SuiteConfig instance.

        Args:
            suite: The identifier of the suite to run.
            dim (optional): The dimension n.
            samples (optional): The number of samples, at least 1.
            seed (optional): The RNG seed.
            tolerances (optional): Overrides of the tolerance ladder, by class.
            domain (optional): The sample box for x, one ``(low, high)`` per
                coordinate. Defaults to the suite's box.
            params (optional): The metric parameters.

        Raises:
            ConfigurationError: If a value is out of range or a key is unknown.
        """
        self.suite = suite
        self.dim = _as_int("dim", dim, 1)
        self.samples = _as_int("samples", samples, 1)
        self.seed = _as_int("seed", seed, 0)
        merged = dict(DEFAULT_TOLERANCES)
        for name, value in (tolerances or {}).items():
            if name not in DEFAULT_TOLERANCES:
                raise ConfigurationError(
                    f"Unknown tolerance class: {name!r}. Known: {', '.join(DEFAULT_TOLERANCES)}"
                )
            if not (math.isfinite(float(value)) and float(value) > 0.0):
                raise ConfigurationError(
                    f"Tolerance {name} must be positive and finite, got {value!r}."
                )
            merged[name] = float(value)
        self._tolerances = merged
        self.domain = _as_domain(domain, self.dim) if domain is not None else None
        unknown = set(params or {}) - PARAMETER_KEYS
        if unknown:
            raise ConfigurationError(f"Unknown metric parameters: {', '.join(sorted(unknown))}")
        self._params: dict[str, Any] = dict(params or {})

    def tolerance(self, name: str) -> float:
        """Return the tolerance of a residual class.

        Raises:
            KeyError: If the class is unknown.
        """
        return self._tolerances[name]

    @staticmethod
    def from_mapping(value: Mapping[str, Any]) -> "SuiteConfig":
        """Create a SuiteConfig instance from a parsed configuration document.

        Raises:
            ConfigurationError: If the document is malformed.
        """
        if not isinstance(value, Mapping):
            raise ConfigurationError("The configuration must be a JSON object.")
        unknown = set(value) - _CONFIG_KEYS
        if unknown:
            raise ConfigurationError(f"Unknown configuration keys: {', '.join(sorted(unknown))}")
        if "suite" not in value:
            raise ConfigurationError("The configuration must name a suite.")
        try:
            return SuiteConfig(
                str(value["suite"]),
                dim=value.get("dim", 2),
                samples=value.get("samples", 200),
                seed=value.get("seed", 1),
                tolerances=value.get("tol"),
                domain=value.get("domain"),
                params=value.get("params"),
            )
        except ConfigurationError:
            raise
        except (TypeError, ValueError) as e:
            raise ConfigurationError(f"Invalid configuration: {e}") from e

    @staticmethod
    def from_json_file(config_file_path: Path | str) -> "SuiteConfig":
        """Create a SuiteConfig instance from a JSON configuration file.

        Args:
            config_file_path: The path at which the configuration file is located.

        Raises:
            FileNotFoundError: If the configuration file does not exist.
            ConfigurationError: If the file is not a valid configuration.
        """
        if isinstance(config_file_path, str):
            config_file_path = Path(config_file_path)

        if not config_file_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_file_path}")

        contents = config_file_path.read_text(encoding="utf-8-sig")
        try:
            document = json.loads(contents)
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"{config_file_path} is not valid JSON: {e}") from e
        _logger.debug("Loaded configuration from %s", config_file_path)
        return SuiteConfig.from_mapping(document)

    def with_overrides(
        self,
        *,
        suite: str | None = None,
        dim: int | None = None,
        samples: int | None = None,
        seed: int | None = None,
        tolerances: Mapping[str, float] | None = None,
        domain: Sequence[Sequence[float]] | None = None,
    ) -> "SuiteConfig":
        """Return a copy with the given fields replaced; tolerance overrides are merged."""
        merged = {
            name: value
            for name, value in self._tolerances.items()
            if value != DEFAULT_TOLERANCES[name]
        }
        merged.update(tolerances or {})
        new_dim = dim if dim is not None else self.dim
        new_domain = domain if domain is not None else self.domain
        if new_domain is not None and len(new_domain) != new_dim:
            _logger.warning(
                "Dropping the %d-dimensional sample box for dimension %d.", len(new_domain), new_dim
            )
            new_domain = None
        return SuiteConfig(
            suite if suite is not None else self.suite,
            dim=new_dim,
            samples=samples if samples is not None else self.samples,
            seed=seed if seed is not None else self.seed,
            tolerances=merged,
            domain=new_domain,
            params=self._params,
        )

    def to_dict(self) -> dict[str, Any]:
        """Convert this SuiteConfig instance to its report representation."""
        return {
            "suite": self.suite,
            "dim": self.dim,
            "samples": self.samples,
            "seed": self.seed,
            "tol": dict(self._tolerances),
            "domain": [list(interval) for interval in self.domain] if self.domain else None,
            "params": dict(sorted(self._params.items())),
        }

    def __eq__(self, other: object) -> bool:
        """Determine equality."""
        if not isinstance(other, SuiteConfig):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __str__(self) -> str:
        """Return a string representation of the SuiteConfig."""
        return (
            f"SuiteConfig({self.suite}, dim={self.dim}, samples={self.samples}, seed={self.seed})"
        )
