#!/usr/bin/env python3
"""Command-line entry point.

Usage example:
    chemolab classify --config examples.json
    chemolab simulate --config run.json --out results/run1 --stride 10
    chemolab sweep --config sweep.json --workers 4
    chemolab check

JSON goes to standard output; logging goes to standard error. Exit codes: 0 success, 1 a run
was blow-up-suspected or no certificate was found, 2 usage or configuration errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from loguru import logger

from chemolab import TOOL_NAME, __version__
from chemolab.cli.commands import EXIT_FLAGGED, EXIT_USAGE, cmd_certify, cmd_classify, cmd_simulate
from chemolab.cli.oracles import cmd_check
from chemolab.cli.sweep import cmd_sweep
from chemolab.config.lab_settings import lab_settings
from chemolab.config.run_config import load_config
from chemolab.errors import ConfigError, LabError


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:  # noqa: D401
    """Parse command-line arguments."""
    p = argparse.ArgumentParser(prog=TOOL_NAME, description="Chemotaxis boundedness laboratory")
    p.add_argument("--version", action="version", version=f"{TOOL_NAME} {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def with_config(name: str, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--config", required=True, type=Path, help="JSON run configuration")
        return cmd

    classify = with_config("classify", "Resolve the boundedness case and verdict")
    classify.add_argument("--store", action="store_true", default=None, help="Persist the verdict")

    with_config("certify", "Search for an exponent certificate")

    simulate = with_config("simulate", "Run the solver with invariant monitors")
    simulate.add_argument("--out", type=Path, help="Output directory (default: BASE_DIR/runs)")
    simulate.add_argument("--stride", type=int, help="Record the monitor every k-th step")
    simulate.add_argument("--store", action="store_true", default=None, help="Persist the run")

    sweep = with_config("sweep", "Sweep one or two model parameters")
    sweep.add_argument("--out", type=Path, help="Output directory (default: BASE_DIR/runs)")
    sweep.add_argument("--workers", type=int, help="Process pool size (default: WORKERS setting)")
    sweep.add_argument("--stride", type=int, help="Record the monitor every k-th step")
    sweep.add_argument("--store", action="store_true", default=None, help="Persist the verdicts")

    sub.add_parser("check", help="Run the built-in oracle suite")
    return p.parse_args(argv)


def _configure_logging() -> None:
    logger.remove()
    logger.add(sys.stderr, level=lab_settings.LOG_LEVEL)


def dispatch(ns: argparse.Namespace) -> int:
    if ns.command == "check":
        return cmd_check().exit_code

    config = load_config(ns.config)
    stride = getattr(ns, "stride", None)
    if stride is not None:
        if stride < 1:
            raise ConfigError("--stride must be at least 1", key="monitor.stride")
        config = config.model_copy(update={"monitor": config.monitor.model_copy(update={"stride": stride})})

    match ns.command:
        case "classify":
            return cmd_classify(config, store=ns.store).exit_code
        case "certify":
            return cmd_certify(config).exit_code
        case "simulate":
            out = ns.out or config.output.out_dir or lab_settings.output_dir
            return cmd_simulate(config, Path(out), store=ns.store).exit_code
        case "sweep":
            out = ns.out or config.output.out_dir or lab_settings.output_dir
            workers = ns.workers if ns.workers is not None else lab_settings.WORKERS
            return cmd_sweep(config, Path(out), workers, store=ns.store).exit_code
    raise AssertionError(ns.command)


def main(argv: list[str] | None = None) -> int:
    ns = parse_args(argv)
    _configure_logging()
    try:
        return dispatch(ns)
    except ConfigError as exc:
        logger.error(f"configuration error{f' at {exc.key}' if exc.key else ''}: {exc}")
        return EXIT_USAGE
    except LabError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        logger.exception(f"unexpected failure: {exc}")
        return EXIT_FLAGGED


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
