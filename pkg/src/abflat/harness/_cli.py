"""Command-line entry point: ``abflat verify``, ``abflat list-suites`` and ``abflat explain``."""

from __future__ import annotations

import argparse
import logging
from collections.abc import Sequence

from abflat._errors import ConfigurationError, SamplingError
from abflat.harness._runner import emit_report, run_suite
from abflat.harness._suites import SUITES, get_suite
from abflat.harness._types._suite_config import SuiteConfig

_logger = logging.getLogger(__name__)

EXIT_PASSED = 0
EXIT_FAILED = 1
EXIT_CONFIGURATION_ERROR = 2


def _tolerance_override(text: str) -> tuple[str, float]:
    name, separator, value = text.partition("=")
    if not separator or not name:
        raise argparse.ArgumentTypeError(f"expected CLASS=VALUE, got {text!r}")
    try:
        return name.strip(), float(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid tolerance value in {text!r}") from e


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abflat",
        description="Verify projectively flat (α,β)-metrics of constant flag curvature.",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress (-v) or per-sample details (-vv) to standard error",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", help="the suite to run; overrides the configuration file")
    verify.add_argument("--config", help="a JSON configuration file")
    verify.add_argument("--dim", type=int, help="the dimension n")
    verify.add_argument("--samples", type=int, help="the number of samples")
    verify.add_argument("--seed", type=int, help="the RNG seed")
    verify.add_argument(
        "--tol",
        action="append",
        type=_tolerance_override,
        default=[],
        metavar="CLASS=VALUE",
        help="override the tolerance of a residual class; may be repeated",
    )
    verify.add_argument("--report", choices=("text", "json"), default="text")
    verify.add_argument("--out", help="write the report to this file instead of standard output")

    commands.add_parser("list-suites", help="list the registered suites")

    explain = commands.add_parser("explain", help="describe the relations a suite exercises")
    explain.add_argument("--suite", required=True)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _load_config(args: argparse.Namespace) -> SuiteConfig:
    if args.config is not None:
        config = SuiteConfig.from_json_file(args.config)
    elif args.suite is not None:
        config = SuiteConfig(args.suite)
    else:
        raise ConfigurationError("verify needs --suite or --config.")
    return config.with_overrides(
        suite=args.suite,
        dim=args.dim,
        samples=args.samples,
        seed=args.seed,
        tolerances=dict(args.tol),
    )


def _verify(args: argparse.Namespace) -> int:
    try:
        config = _load_config(args)
        report = run_suite(config)
    except (ConfigurationError, SamplingError, FileNotFoundError) as e:
        _logger.error("%s", e)
        return EXIT_CONFIGURATION_ERROR
    emit_report(report, args.report, args.out)
    return EXIT_PASSED if report.passed else EXIT_FAILED


def _list_suites() -> int:
    width = max(len(identifier) for identifier in SUITES)
    for suite in SUITES.values():
        print(f"{suite.identifier.ljust(width)}  {suite.summary}")
    return EXIT_PASSED


def _explain(args: argparse.Namespace) -> int:
    try:
        suite = get_suite(args.suite)
    except ConfigurationError as e:
        _logger.error("%s", e)
        return EXIT_CONFIGURATION_ERROR
    print(suite.explain())
    return EXIT_PASSED


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return its exit code.

    The exit code is 0 when every check passes, 1 when a check fails and 2
    for a configuration error.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PASSED if e.code == 0 else EXIT_CONFIGURATION_ERROR
    _configure_logging(args.verbose)
    if args.command == "verify":
        return _verify(args)
    if args.command == "list-suites":
        return _list_suites()
    return _explain(args)

