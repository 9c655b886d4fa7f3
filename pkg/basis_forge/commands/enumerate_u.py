import argparse
import logging
from pathlib import Path

from basis_forge.commands import positive_int
from basis_forge.exceptions import BasisForgeError
from basis_forge.services.u_sequence_service import bound
from basis_forge.utils.file_io import load_target

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("enumerate-u", help="Print the first terms of the sequence U of a target")
    parser.add_argument("target", type=Path, help="Target file")
    parser.add_argument("--count", "-K", type=positive_int, required=True, help="Number of terms")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    """Rows k, u_k, m_k, [(k+delta)/2], margin; m_k is '-' for explicit sequences"""
    try:
        target, useq = load_target(args.target)
        useq.extend(args.count)
    except BasisForgeError as e:
        logger.error(f"{e}")
        return e.exit_code

    delta = useq.delta
    print("k,u,m,bound,margin")
    for k, (u, m) in enumerate(useq.emitted()[: args.count], start=1):
        limit = bound(k, delta)
        print(f"{k},{u},{'-' if m is None else m},{limit},{limit - abs(u)}")
    return 0
