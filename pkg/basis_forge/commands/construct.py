import argparse
import logging
from pathlib import Path

from basis_forge.commands import parse_policy, positive_int
from basis_forge.exceptions import BasisForgeError, WindowExhaustedError
from basis_forge.models.construction import ConstructionState, StepRecord
from basis_forge.services.constructor_h_service import constructor_for
from basis_forge.utils.file_io import basis_from_state, load_target, write_basis

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("construct", help="Build a basis for a target and write it to a file")
    parser.add_argument("target", type=Path, help="Target file")
    parser.add_argument("--steps", "-K", type=positive_int, required=True, help="Number of steps K")
    parser.add_argument("--order", "-H", type=int, default=2, help="Order h (default: 2)")
    parser.add_argument("--restricted", action="store_true", help="Count sums of distinct elements only")
    parser.add_argument(
        "--policy",
        type=parse_policy,
        default="min-abs",
        help="min-abs | stream:HEXBITS | seed:N (default: min-abs)",
    )
    parser.add_argument("--out", "-o", type=Path, required=True, help="Basis file to write")
    parser.set_defaults(handler=handle)


def _print_step(state: ConstructionState, record: StepRecord) -> None:
    print(
        f"k={record.k} i_k={record.i_k} u={record.u} a={record.a} "
        f"window={record.window_bound} admissible={record.admissible_found}"
    )


def handle(args: argparse.Namespace) -> int:
    """Run the construction, one summary line per step"""
    if args.order < 2:
        logger.error(f"Order must be at least 2, got {args.order}")
        return 2
    try:
        target, useq = load_target(args.target)
        service = constructor_for(target, args.order, args.policy, args.restricted, useq)
        state, _ = service.run(args.steps, on_step=_print_step)
        write_basis(args.out, basis_from_state(state))
        return 0
    except WindowExhaustedError as e:
        logger.error(f"{e}; exclusion census: {e.census}")
        return e.exit_code
    except BasisForgeError as e:
        logger.error(f"Construction failed: {e}")
        return e.exit_code
