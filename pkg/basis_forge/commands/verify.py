import argparse
import logging
from pathlib import Path

from basis_forge.commands import parse_window
from basis_forge.exceptions import AuditFailureError, BasisForgeError
from basis_forge.services.verify_service import VerifyService
from basis_forge.utils.file_io import load_basis, load_target

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="Replay and audit a basis file against its target")
    parser.add_argument("basis", type=Path, help="Basis file")
    parser.add_argument("target", type=Path, help="Target file the basis was built for")
    parser.add_argument(
        "--window",
        "-w",
        type=parse_window,
        default=(-100, 100),
        help="N for [-N, N] or LO:HI (default: 100)",
    )
    parser.add_argument("--rerun", action="store_true", help="Also rebuild the basis from its policy")
    parser.add_argument("--report", type=Path, default=None, help="Also write the JSON report to this file")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    """Print the verification report; exit 4 when any condition fails"""
    try:
        basis = load_basis(args.basis)
        target, useq = load_target(args.target)
        report = VerifyService(basis, target, useq).verify(args.window, rerun=args.rerun)
    except BasisForgeError as e:
        logger.error(f"Verification aborted: {e}")
        return e.exit_code

    text = report.model_dump_json(indent=2)
    print(text)
    if args.report is not None:
        args.report.write_text(text + "\n", encoding="utf-8")
    if not report.passed:
        return AuditFailureError.exit_code
    return 0
