import argparse
import logging
import sys
from pathlib import Path

from basis_forge.exceptions import AuditFailureError, BasisForgeError
from basis_forge.models.integer_set import IntegerSet
from basis_forge.services.audit_service import growth_rows
from basis_forge.services.constructor_h_service import expected_constant
from basis_forge.utils.file_io import load_basis, load_target, write_growth_csv

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("growth", help="Tabulate A(-x, x) against (x/c)^(1/(2h-1))")
    parser.add_argument("basis", type=Path, help="Basis file")
    parser.add_argument("--target", type=Path, default=None, help="Target file the basis was built for")
    parser.add_argument("--csv", type=Path, default=None, help="CSV file to write (default: stdout)")
    parser.add_argument("--samples", type=int, default=None, help="Geometric sample count")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    """Growth rows under the window constant the order and Δ imply; exit 4 on any failure"""
    try:
        basis = load_basis(args.basis)
        delta = load_target(args.target)[0].delta if args.target is not None else basis.delta
    except BasisForgeError as e:
        logger.error(f"{e}")
        return e.exit_code

    if basis.delta != delta:
        logger.error(f"Stored delta={basis.delta}, target has delta={delta}")
        return AuditFailureError.exit_code
    c = expected_constant(basis.order, delta)
    if basis.c != c:
        logger.error(f"Stored c={basis.c}, expected c={c} for order {basis.order} and delta={delta}")
        return AuditFailureError.exit_code

    rows = growth_rows(IntegerSet.of(basis.elements), c, basis.K, basis.order, args.samples)
    if args.csv is None:
        write_growth_csv(sys.stdout, rows)
    else:
        with open(args.csv, "w", encoding="utf-8", newline="") as f:
            write_growth_csv(f, rows)

    failed = [row.x for row in rows if not row.passed]
    if failed:
        logger.error(f"Growth bound fails at {len(failed)} point(s), first x={failed[0]}")
        return AuditFailureError.exit_code
    return 0
