import argparse
import json
import logging
import sys
from typing import List, Optional

from laplat import __version__
from laplat.cli import chipfire, delaunay, invariants, oracle, reconstruct
from laplat.cli.common import render
from laplat.core.errors import LaplatError
from laplat.core.logging import configure_logging

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laplat",
        description="Exact geometry of Laplacian lattices under the simplicial distance",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=["json", "pretty"], default="json", help="output layout (default json)")
    parser.add_argument("--guard-override", action="store_true", help="lift the enumeration size guards")
    parser.add_argument("--log-level", default=None, help="logging level for stderr (default from LAPLAT_LOG_LEVEL)")

    subparsers = parser.add_subparsers(dest="command", required=True)
    invariants.register(subparsers)
    delaunay.register(subparsers)
    reconstruct.register(subparsers)
    chipfire.register(subparsers)
    oracle.register(subparsers)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run one subcommand and write its result; returns the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        configure_logging(args.log_level)
        result = args.handler(args)
        sys.stdout.write(render(result, args.format))
        sys.stdout.write("\n")
        return 0
    except LaplatError as e:
        logger.debug(f"{args.command} failed: {e.message}")
        sys.stderr.write(json.dumps(e.to_dict(), default=str))
        sys.stderr.write("\n")
        return e.exit_code


def main() -> None:
    sys.exit(run(sys.argv[1:]))
