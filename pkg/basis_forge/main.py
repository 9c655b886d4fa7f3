"""
basis-forge: bases of the integers with a prescribed representation function
"""
import argparse
import logging
import sys
from typing import Optional, Sequence

from basis_forge.commands import construct, enumerate_u, growth, oracle, verify
from basis_forge.config import settings

# Configure logging
logging.basicConfig(
    level=settings.log_level,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)

COMMANDS = (construct, verify, growth, enumerate_u, oracle)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="basis-forge",
        description=f"{settings.PROJECT_NAME} v{settings.VERSION}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s construct unit.json -K 50 --out basis.json        # f = 1, order 2
  %(prog)s construct unit.json -K 8 --order 3 --out b3.json  # order 3
  %(prog)s construct unit.json -K 3 --policy stream:5 -o b.json
  %(prog)s verify basis.json unit.json --window 200
  %(prog)s growth basis.json --csv growth.csv
  %(prog)s enumerate-u unit.json -K 7
  %(prog)s oracle set.json --order 2 --window 0:6

Exit codes: 0 ok, 2 invalid input, 3 window exhausted, 4 audit failure.
Log level: BASIS_FORGE_LOG=error|info|debug
        """,
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point"""
    parser = build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)

    if not args.command:
        parser.print_help()
        return 1

    try:
        return args.handler(args)
    except KeyboardInterrupt:
        logger.warning("Operation cancelled by user")
        return 1


if __name__ == "__main__":
    sys.exit(main())
