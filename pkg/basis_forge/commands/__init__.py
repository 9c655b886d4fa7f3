"""
Subcommands of the basis-forge CLI, one module each.

Every module exposes register(subparsers) and handle(args) -> exit code.
"""
import argparse
from typing import Tuple

from basis_forge.models.construction import ChoicePolicy


def parse_window(text: str) -> Tuple[int, int]:
    """N for [-N, N], or LO:HI"""
    try:
        if ":" in text:
            lo, hi = (int(part) for part in text.split(":", 1))
        else:
            hi = int(text)
            lo = -hi
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must be N or LO:HI, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty window {text!r}")
    return lo, hi


def parse_policy(text: str) -> ChoicePolicy:
    try:
        return ChoicePolicy.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value
