"""Helper methods to convert between SuiteReport and its text and JSON forms."""

from __future__ import annotations

import json
import logging
import math

from abflat.harness._types._check_result import CheckResult
from abflat.harness._types._suite_report import SuiteReport

_logger = logging.getLogger(__name__)

_COLUMNS = ("check", "relation", "max", "mean", "n", "threshold", "outcome")


def report_to_json(report: SuiteReport) -> str:
    """Return the JSON document of a report, with a fixed key order and a trailing newline.

    Non-finite residuals are written as strings, so the document is strict
    JSON and a failed check stays readable by :func:`report_from_json`.

    >>> print(report_to_json(SuiteReport("flat-parallel")), end="")
    {
      "schema_version": 1,
      "suite": "flat-parallel",
      "config": {},
      "checks": [],
      "incidents": [],
      "pass": true,
      "engine_version": "",
      "runtime_ms": 0.0
    }
    """
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def report_from_json(document: str) -> SuiteReport:
    """Parse a report written by :func:`report_to_json`.

    Raises:
        ValueError: If the document is not a report.
    """
    try:
        value = json.loads(document)
        return SuiteReport.from_dict(value)
    except (KeyError, TypeError) as e:
        raise ValueError(f"The document is not a suite report: {e}") from e


def _format_value(value: float) -> str:
    if math.isnan(value):
        return "-"
    return f"{value:.3e}"


def _row(check: CheckResult) -> tuple[str, ...]:
    no_samples = check.samples == 0
    return (
        check.name,
        check.equation,
        "-" if no_samples else _format_value(check.max_residual),
        "-" if no_samples else _format_value(check.mean_residual),
        str(check.samples),
        f"{check.comparison} {check.threshold:g}",
        check.outcome.to_name(),
    )


def format_report_text(report: SuiteReport) -> str:
    """Return a human-readable table of a report."""
    rows = [_COLUMNS] + [_row(check) for check in report.checks]
    widths = [max(len(row[i]) for row in rows) for i in range(len(_COLUMNS))]
    lines = [
        f"suite: {report.suite}",
        f"engine: {report.engine_version or 'unknown'}",
        "",
    ]
    for index, row in enumerate(rows):
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
        if index == 0:
            lines.append("  ".join("-" * width for width in widths))
    if report.incidents:
        lines.append("")
        lines.append(f"incidents: {len(report.incidents)}")
        lines.extend(f"  {incident}" for incident in report.incidents)
    lines.append("")
    verdict = "PASS" if report.passed else report.outcome.to_name()
    lines.append(f"result: {verdict} ({report.runtime_ms:.1f} ms)")
    return "\n".join(lines) + "\n"
