import argparse
import logging
from pathlib import Path

from basis_forge.commands import parse_window
from basis_forge.exceptions import BasisForgeError
from basis_forge.services.sumset_service import full_window, rep_table
from basis_forge.utils.file_io import load_set

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("oracle", help="Brute-force representation counts of a finite set")
    parser.add_argument("set", type=Path, help="Set file (JSON list, or an object with elements)")
    parser.add_argument("--order", "-H", type=int, default=2, help="Order h (default: 2)")
    parser.add_argument("--restricted", action="store_true", help="Count sums of distinct elements only")
    parser.add_argument("--window", "-w", type=parse_window, default=None, help="N or LO:HI (default: all of hA)")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    if args.order < 1:
        logger.error(f"Order must be positive, got {args.order}")
        return 2
    try:
        values = load_set(args.set)
    except BasisForgeError as e:
        logger.error(f"{e}")
        return e.exit_code

    window = args.window or full_window(values, args.order)
    table = rep_table(values, args.order, args.restricted, window)
    print("n,r")
    for n, r in table.as_dict().items():
        print(f"{n},{r}")
    return 0
