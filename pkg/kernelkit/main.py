import argparse
import sys
from typing import List, Optional

from kernelkit import __version__
from kernelkit.core.config import settings
from kernelkit.core.errors import KernelkitError
from kernelkit.core.logs import setup_logging
from kernelkit.routers import check_bounds, gen, kernelize, solve, suite, verify


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kernelkit", description="Kernels and exact solvers for edge coloring and strong triadic closure"
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    # routers
    kernelize.register(sub)
    solve.register(sub)
    verify.register(sub)
    gen.register(sub)
    check_bounds.register(sub)
    suite.register(sub)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging("DEBUG" if args.verbose else settings.log_level)
    try:
        return args.handler(args)
    except KernelkitError as e:
        print(f"error: {e.detail}", file=sys.stderr)
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
