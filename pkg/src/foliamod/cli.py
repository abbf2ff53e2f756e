"""CLI entry point for foliamod.

Invoked via:
  foliamod COMMAND ...        # installed via pyproject.toml [project.scripts]
  python -m foliamod COMMAND  # via __main__.py

Reports go to standard output (JSON, or CSV with ``--csv``); logs go to
standard error. Exit codes: 0 on success, 2 when the input is rejected,
1 on an internal numerical failure. Batch runs (``--random``) exit 2 only
when more than 2% of the samples are rejected.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from typing import Optional, Union

from foliamod import __version__
from foliamod.commands import (
    cmd_darboux_scan,
    cmd_dimension,
    cmd_fiber_search,
    cmd_holonomy,
    cmd_indices,
    cmd_random,
    cmd_rank,
    cmd_singular,
    cmd_verify,
)
from foliamod.commands.common import is_batch
from foliamod.config import Settings, get_settings
from foliamod.core.errors import FoliamodError, InputUnreadable
from foliamod.io.report import Report

logger = logging.getLogger(__name__)

Command = Callable[[argparse.Namespace, Settings], Union[Report, str]]

COMMANDS: dict[str, tuple[Command, str]] = {
    "singular": (cmd_singular, "list singular points with eigenvalues and indices"),
    "indices": (cmd_indices, "Baum-Bott and Camacho-Sad sums"),
    "verify": (cmd_verify, "check the index identities and genericity"),
    "rank": (cmd_rank, "rank of the moduli map at the regular representative"),
    "dimension": (cmd_dimension, "dimension count for degree n"),
    "darboux": (cmd_darboux_scan, "scan the Darboux family over a k grid"),
    "fiber": (cmd_fiber_search, "search the fiber of the moduli map"),
    "holonomy": (cmd_holonomy, "holonomy multipliers at infinity"),
    "random": (cmd_random, "write a seeded random field file"),
}
FIELD_COMMANDS = ("singular", "indices", "verify", "rank", "fiber", "holonomy")


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", metavar="PATH", help="field file (JSON)")
    parser.add_argument("--random", action="store_true", help="use seeded random fields")
    parser.add_argument("--count", type=int, default=1, help="number of random fields")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foliamod",
        description="Singular-point invariants and the moduli map of polynomial foliations",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    common.add_argument("--seed", type=int, default=0, help="random seed (default: 0)")
    common.add_argument("--degree", type=int, default=2, help="field degree (default: 2)")
    common.add_argument("--tol", type=float, help="root and residual tolerance")
    output = common.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true", help="JSON report (default)")
    output.add_argument("--csv", action="store_true", help="CSV table of the result rows")

    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        if name in FIELD_COMMANDS:
            _add_input_flags(cmd)
        if name == "darboux":
            cmd.add_argument("--alpha", metavar="RE,IM", help="exponent (default: 2)")
            cmd.add_argument(
                "--k-grid", metavar="SPEC", help="'k1;k2;...' or 'lin:START:STOP:COUNT'"
            )
        if name == "fiber":
            cmd.add_argument("--restarts", type=int, default=8, help="Gauss-Newton restarts")
            cmd.add_argument(
                "--cold", action="store_true", help="random restarts instead of perturbations"
            )
    return parser


def configure_logging(verbosity: int, default_level: str) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.getLevelName(default_level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def _emit(report: Report, args: argparse.Namespace) -> None:
    sys.stdout.write(report.to_csv() if args.csv else report.to_json())


def _fail(error: FoliamodError, args: argparse.Namespace) -> int:
    logger.error("%s: %s", error.code, error)
    report = Report(command=args.command, input_digest="")
    report.add_error(0, error)
    _emit(report, args)
    return error.exit_code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code."""
    args = build_parser().parse_args(argv)
    settings = get_settings()
    if args.tol is not None:
        settings = settings.model_copy(update={"tol": args.tol})
    configure_logging(args.verbose, settings.log_level)

    command, _ = COMMANDS[args.command]
    try:
        result = command(args, settings)
    except FoliamodError as exc:
        return _fail(exc, args)
    except OSError as exc:
        return _fail(InputUnreadable(f"cannot read input: {exc}"), args)

    if isinstance(result, str):
        sys.stdout.write(result)
        return 0
    _emit(result, args)
    status = result.exit_status(batch=is_batch(args))
    logger.info(
        "%s finished in %.2fs with %d error(s), exit %d",
        args.command,
        result.wall_time_s,
        len(result.errors),
        status,
    )
    return status


if __name__ == "__main__":
    raise SystemExit(main())
