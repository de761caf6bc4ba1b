# Area: CLI
# PRD: docs/prd-qweight.md
"""qweight entry point.

Usage:
    qweight weights --n 6 --k 0 --D 2 --kind sl
    qweight check 9 3 4 3 --format json
    qweight family 12 3
    qweight table --D 3 --format csv
    qweight oracle shor --reduce 9
"""
import sys
from typing import Optional, Sequence

from qweight.cli.commands import CommandRouter
from qweight.cli.parser import build_parser
from qweight.shared.config import get_settings
from qweight.shared.errors import QWeightError
from qweight.shared.logging.verdict_logger import configure_logging, log_error


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse, dispatch, print the document; return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        settings = get_settings().with_catalog(args.catalog)
        configure_logging(settings.log_level, settings.color and not args.no_color, args.verbose)
        result = CommandRouter(settings).dispatch(args)
    except QWeightError as e:
        log_error(str(e))
        return e.exit_code
    sys.stdout.write(result.document.render())
    return result.exit_code


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
