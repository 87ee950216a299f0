"""Suite orchestration and report emission."""

from __future__ import annotations

import logging
import sys
import time
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Literal

from abflat.harness._json_conversion import format_report_text, report_to_json
from abflat.harness._recorder import SuiteRecorder
from abflat.harness._suites import get_suite
from abflat.harness._types._suite_config import SuiteConfig
from abflat.harness._types._suite_report import SuiteReport

_logger = logging.getLogger(__name__)

ReportFormat = Literal["text", "json"]


def engine_version() -> str:
    """Return the installed version of abflat, or ``0+unknown`` when it is not installed."""
    try:
        return version("abflat")
    except PackageNotFoundError:
        return "0+unknown"


def run_suite(config: SuiteConfig) -> SuiteReport:
    """Run a registered suite and aggregate its checks into a report.

    Residual failures are reported, never raised. Engine errors at a sample
    become incidents of the report. When the configuration has no sample box,
    the suite's default box is used and echoed in the report.

    Raises:
        ConfigurationError: If the suite is unknown or cannot run with the configuration.
        SamplingError: If no admissible sample can be drawn from the box.
    """
    suite = get_suite(config.suite)
    if config.domain is None:
        config = config.with_overrides(domain=suite.default_domain(config.dim))
    _logger.info(
        "Running %s with dim=%d, samples=%d, seed=%d",
        suite.identifier,
        config.dim,
        config.samples,
        config.seed,
    )
    recorder = SuiteRecorder(config)
    start = time.perf_counter()
    suite.run(config, recorder)
    runtime_ms = (time.perf_counter() - start) * 1000.0
    report = SuiteReport(
        suite.identifier,
        config=config.to_dict(),
        checks=recorder.results(),
        incidents=recorder.incidents,
        engine_version=engine_version(),
        runtime_ms=round(runtime_ms, 3),
    )
    _logger.info("%s", report)
    return report


def emit_report(
    report: SuiteReport, fmt: ReportFormat = "text", out: Path | str | None = None
) -> None:
    """Write a report as a text table or as JSON.

    Args:
        report: The report to write.
        fmt (optional): "text" or "json".
        out (optional): The output path. Defaults to standard output.

    Raises:
        ValueError: If the format is unknown.
        OSError: If the output file cannot be written.
    """
    if fmt == "json":
        document = report_to_json(report)
    elif fmt == "text":
        document = format_report_text(report)
    else:
        raise ValueError(f"Unknown report format: {fmt!r}")

    if out is None:
        sys.stdout.write(document)
        return
    if isinstance(out, str):
        out = Path(out)
    out.write_text(document, encoding="utf-8")
    _logger.debug("Wrote %s report to %s", fmt, out)
