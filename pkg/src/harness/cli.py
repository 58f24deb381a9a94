"""
Command-line interface: analyze, verify and catalog subcommands

Exit codes: 0 all checks pass, 1 at least one failing cell, 2 usage, parse or
configuration error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Set

from ..catalog.io import load_group
from ..catalog.standard import build_named, catalog_listing, catalog_names
from ..core.config import config
from ..core.exceptions import GroupComputationError, ParseError
from ..fusion.classes import ClassKind, parse_fusion_class
from ..perm.group import FiniteGroup
from ..perm.numbers import require_prime
from .render import render_analysis, render_catalog, render_suite
from .results import Claim
from .suite import analyze_group, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _configure_logging(verbose: int, quiet: bool):
    if quiet:
        level = logging.ERROR
    elif verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, config.LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s: %(message)s", force=True)


def parse_primes(text: str) -> Set[int]:
    primes = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            value = int(part)
        except ValueError:
            raise ParseError(f"not an integer: {part!r}", field="primes")
        primes.add(require_prime(value))
    if not primes:
        raise ParseError("no primes given", field="primes")
    return primes


def resolve_group(reference: str) -> FiniteGroup:
    """A group file path, or the name of a catalog group"""
    path = Path(reference)
    if path.is_file():
        return load_group(path)
    try:
        return build_named(reference)
    except KeyError:
        raise ParseError(f"no such file or catalog group: {reference!r}", field="group")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusion-check",
        description="Fusion control and p-nilpotency checks on small permutation groups",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="More logging (repeatable).")
    parser.add_argument("-q", "--quiet", action="store_true", help="Only log errors.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser("analyze", help="Analyze one group at one prime.")
    analyze.add_argument("--group", required=True, help="Group file (JSON) or catalog name.")
    analyze.add_argument("--prime", type=int, required=True, help="Prime p.")
    analyze.add_argument(
        "--class",
        dest="fusion_class",
        default=ClassKind.CP.value,
        choices=[kind.value for kind in ClassKind],
        help="Subgroup class whose fusion is tested.",
    )
    analyze.add_argument("--format", choices=["json", "text"], default="json")
    analyze.add_argument(
        "--full-witness",
        action="store_true",
        default=None,
        help="Collect every violating pair instead of stopping at the first.",
    )

    verify = subparsers.add_parser("verify", help="Run the claim suite over the catalog.")
    verify.add_argument("--max-order", type=int, default=None, help="Largest group order to include.")
    verify.add_argument("--primes", default=None, help="Comma-separated primes, e.g. 2,3,5.")
    verify.add_argument(
        "--claim",
        action="append",
        choices=[claim.value for claim in Claim],
        help="Restrict to this claim (repeatable).",
    )
    verify.add_argument("--format", choices=["json", "text"], default="json")
    verify.add_argument("--workers", type=int, default=None, help="Worker processes.")

    catalog = subparsers.add_parser("catalog", help="Show the standard catalog.")
    catalog.add_argument("--list", action="store_true", help="List name, order and degree.")
    catalog.add_argument("--max-order", type=int, default=None)
    catalog.add_argument("--format", choices=["json", "text"], default="json")

    return parser


def _run_analyze(args) -> int:
    G = resolve_group(args.group)
    fusion_class = parse_fusion_class(args.fusion_class, args.prime)
    analysis = analyze_group(G, args.prime, fusion_class, full_witness=args.full_witness)
    sys.stdout.write(render_analysis(analysis, args.format))
    return EXIT_OK


def _run_verify(args) -> int:
    primes = parse_primes(args.primes) if args.primes else None
    claims = [Claim(value) for value in args.claim] if args.claim else None
    report = run_suite(max_order=args.max_order, primes=primes, claims=claims, workers=args.workers)
    sys.stdout.write(render_suite(report, args.format))
    if args.format == "json":
        sys.stdout.write("\n")
    return report.exit_code


def _run_catalog(args) -> int:
    if args.list:
        sys.stdout.write(render_catalog(catalog_listing(args.max_order), args.format))
    else:
        sys.stdout.write("\n".join(catalog_names(args.max_order)) + "\n")
    if args.list and args.format == "json":
        sys.stdout.write("\n")
    return EXIT_OK


COMMANDS = {
    "analyze": _run_analyze,
    "verify": _run_verify,
    "catalog": _run_catalog,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose, args.quiet)

    errors: List[str] = config.validate_limits() + config.validate_logging_config()
    if errors:
        for error in errors:
            logger.error(f"Configuration error: {error}")
        return EXIT_USAGE
    if getattr(args, "workers", None) is not None and args.workers < 1:
        logger.error(f"--workers must be at least 1 (got {args.workers})")
        return EXIT_USAGE

    try:
        return COMMANDS[args.command](args)
    except GroupComputationError as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_USAGE
