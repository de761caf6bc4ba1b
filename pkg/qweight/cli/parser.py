# Area: CLI
# PRD: docs/prd-qweight.md
"""Argument parser."""
import argparse

from qweight.shared.config import FORMATS


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with code 2 and the message on stderr."""

    def error(self, message: str) -> None:
        self.print_usage()
        self.exit(2, f"Error: {message}\n")


def _add_code_params(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--n", type=int, required=True, help="number of systems")
    dim = sub.add_mutually_exclusive_group(required=True)
    dim.add_argument("--k", type=int, help="log-dimension k (K = D^k)")
    dim.add_argument("--K", type=int, dest="K", help="explicit dimension K, must be a power of D")
    sub.add_argument("--D", type=int, required=True, dest="D", help="local dimension")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help="output format (default from js/config.json)")
    common.add_argument("--catalog", default=None, help="catalog file (overrides QWEIGHT_CATALOG)")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging and verdict trace")
    common.add_argument("--no-color", action="store_true", help="plain verdict trace")

    parser = _Parser(
        prog="qweight",
        description="Quantum weight enumerators and QMDS feasibility.",
    )
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    weights = subs.add_parser("weights", parents=[common], help="closed-form QMDS/AME weights")
    _add_code_params(weights)
    weights.add_argument("--kind", choices=("sl", "unitary"), default="sl")

    shadow = subs.add_parser("shadow", parents=[common], help="shadow coefficients S_j")
    _add_code_params(shadow)

    check = subs.add_parser("check", parents=[common], help="layered verdict for (n, k, d, D)")
    check.add_argument("n", type=int)
    check.add_argument("k", type=int, help="log-dimension, or dimension K with --K")
    check.add_argument("d", type=int)
    check.add_argument("D", type=int)
    check.add_argument("--K", action="store_true", dest="explicit_K",
                       help="read the second argument as the dimension K")

    family = subs.add_parser("family", parents=[common], help="scan the family n+k = SUM")
    family.add_argument("sum", type=int, metavar="SUM")
    family.add_argument("D", type=int)

    table = subs.add_parser("table", parents=[common], help="upper/lower distance table")
    table.add_argument("--D", type=int, required=True, dest="D")
    table.add_argument("--max", type=int, default=None, dest="max_sum",
                       help="largest n+k (default 2(D^2-1))")

    oracle = subs.add_parser("oracle", parents=[common], help="stabilizer oracle on a fixture")
    oracle.add_argument("fixture", metavar="FILE", help="fixture path or shipped fixture name")
    oracle.add_argument("--reduce", default=None, metavar="V",
                        help="comma-separated 1-based sites to trace out")
    oracle.add_argument("--purify", action="store_true", help="purify before computing weights")
    oracle.add_argument("--dense", action="store_true", help="also run the dense cross-check")

    catalog = subs.add_parser("catalog", parents=[common], help="list known constructions")
    catalog.add_argument("D", type=int)
    catalog.add_argument("--sum", type=int, default=None, dest="family_sum",
                         help="only the family n+k = SUM")
    return parser
