# Area: CLI
# PRD: docs/prd-qweight.md
"""Command Router - one handler per subcommand.

Each handler returns a CommandResult carrying the output document and
the exit code; errors propagate as QWeightError subclasses.
"""
import argparse
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Optional

from qweight.cli.output import OutputDocument, format_rational, join_values
from qweight.enumerators import (
    CodeParams,
    WeightDistribution,
    code_check,
    log_exact,
    qmds_sl,
    qmds_unitary,
    shadow,
    unitary_from_sl,
)
from qweight.feasibility import (
    Catalog,
    FeasibilityVerdict,
    check,
    family_scan,
    load_catalog,
    make_table,
)
from qweight.oracle import (
    code_state_vectors,
    dense_weights,
    group_sl_weights,
    load_fixture,
    purify,
    read_fixture,
    reduced_weights,
)
from qweight.shared.config import Settings
from qweight.shared.errors import DomainError, InconsistencyError, UsageError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_EXCLUDED = 1


@dataclass
class CommandResult:
    document: OutputDocument
    exit_code: int = EXIT_OK


def params_from_flags(n: int, k: Optional[int], K: Optional[int], D: int) -> CodeParams:
    """QMDS parameters for (n, k, D), or AME parameters for odd n with k = 0."""
    if K is not None:
        exact = log_exact(K, D) if K >= 1 and D >= 2 else None
        if exact is None or exact.denominator != 1:
            raise UsageError(f"K={K} is not a power of D={D}")
        k = int(exact)
    if not 0 <= k <= n:
        raise DomainError(f"k={k} outside 0..{n}")
    if (n - k) % 2 == 0:
        return CodeParams.qmds(n, k, D)
    if k == 0:
        return CodeParams.ame(n, D)
    raise DomainError(f"n={n}, k={k}: n-k must be even for QMDS parameters")


def parse_sites(spec: str, n: int) -> int:
    """'1,3' -> bitmask of 0-based sites."""
    mask = 0
    for token in spec.split(","):
        token = token.strip()
        if not token.isdigit() or not 1 <= int(token) <= n:
            raise UsageError(f"site {token!r} must be an integer in 1..{n}")
        mask |= 1 << (int(token) - 1)
    return mask


def _witness_text(v: FeasibilityVerdict) -> Optional[str]:
    if v.witness is None:
        return None
    return f"S_{v.witness.index}={format_rational(v.witness.value)}"


def _verdict_line(v: FeasibilityVerdict) -> str:
    parts = [f"{v.params}", v.status.value]
    if v.reason:
        parts.append(v.reason.value)
    witness = _witness_text(v)
    if witness:
        parts.append(witness)
    if v.citation:
        parts.append(f"[{v.citation}]")
    return "  ".join(parts)


def _verdict_row(v: FeasibilityVerdict) -> list[Any]:
    w = v.witness
    return [v.params.label, v.params.D, v.status.value, v.reason.value if v.reason else None,
            w.index if w else None, w.value if w else None, v.citation]


VERDICT_HEADER = ["code", "D", "status", "reason", "witness_j", "witness_value", "citation"]


def _weights_document(fmt: str, w: WeightDistribution, payload: dict[str, Any]) -> OutputDocument:
    payload = {**payload, "kind": w.kind.value, "trace": w.trace, "values": list(w.values)}
    return OutputDocument(
        format=fmt,
        payload=payload,
        lines=[join_values(w.values)],
        header=["j", "value"],
        rows=[[j, v] for j, v in enumerate(w.values)],
    )


def _params_payload(p: CodeParams) -> dict[str, Any]:
    return {"code": p.label, "n": p.n, "k": p.k, "d": p.d, "D": p.D}


class CommandRouter:
    """Routes a parsed command line to its handler."""

    WEIGHTS = "weights"
    SHADOW = "shadow"
    CHECK = "check"
    FAMILY = "family"
    TABLE = "table"
    ORACLE = "oracle"
    CATALOG = "catalog"

    def __init__(self, settings: Settings) -> None:
        self._settings = settings
        self._catalog: Optional[Catalog] = None
        self._handlers: dict[str, Callable[[argparse.Namespace, str], CommandResult]] = {
            self.WEIGHTS: self._handle_weights,
            self.SHADOW: self._handle_shadow,
            self.CHECK: self._handle_check,
            self.FAMILY: self._handle_family,
            self.TABLE: self._handle_table,
            self.ORACLE: self._handle_oracle,
            self.CATALOG: self._handle_catalog,
        }

    @property
    def catalog(self) -> Catalog:
        if self._catalog is None:
            self._catalog = load_catalog(self._settings.catalog_path)
        return self._catalog

    def dispatch(self, args: argparse.Namespace) -> CommandResult:
        handler = self._handlers.get(args.command)
        if handler is None:
            raise UsageError(f"unknown command {args.command!r}")
        fmt = args.format or self._settings.default_format
        return handler(args, fmt)

    def _handle_weights(self, args: argparse.Namespace, fmt: str) -> CommandResult:
        p = params_from_flags(args.n, args.k, args.K, args.D)
        w = qmds_sl(p) if args.kind == "sl" else qmds_unitary(p)
        return CommandResult(_weights_document(fmt, w, _params_payload(p)))

    def _handle_shadow(self, args: argparse.Namespace, fmt: str) -> CommandResult:
        p = params_from_flags(args.n, args.k, args.K, args.D)
        S = shadow(qmds_unitary(p))
        payload = _params_payload(p)
        payload["negative"] = [[j, v] for j, v in enumerate(S.values) if v < 0]
        return CommandResult(_weights_document(fmt, S, payload))

    def _handle_check(self, args: argparse.Namespace, fmt: str) -> CommandResult:
        if args.explicit_K:
            p = CodeParams.from_dimension(args.n, args.k, args.d, args.D)
        else:
            p = CodeParams(args.n, args.k, args.d, args.D)
        verdict = check(p, self.catalog)
        document = OutputDocument(
            format=fmt,
            payload=verdict.to_payload(),
            lines=[_verdict_line(verdict)],
            header=VERDICT_HEADER,
            rows=[_verdict_row(verdict)],
        )
        return CommandResult(document, EXIT_EXCLUDED if verdict.excluded else EXIT_OK)

    def _handle_family(self, args: argparse.Namespace, fmt: str) -> CommandResult:
        scan = family_scan(args.sum, args.D, self.catalog)
        payload = {
            "n+k": scan.n_plus_k,
            "D": scan.D,
            "upper": scan.upper.label,
            "members": [v.to_payload() for v in scan.verdict_chain],
        }
        lines = [f"family n+k={scan.n_plus_k} D={scan.D}: upper {scan.upper.label}"]
        lines += ["  " + _verdict_line(v) for v in scan.verdict_chain]
        document = OutputDocument(
            format=fmt,
            payload=payload,
            lines=lines,
            header=VERDICT_HEADER,
            rows=[_verdict_row(v) for v in scan.verdict_chain],
        )
        return CommandResult(document)

    def _handle_table(self, args: argparse.Namespace, fmt: str) -> CommandResult:
        rows = make_table(args.D, args.max_sum, self.catalog)
        lines = [f"{'n+k':>4}  {'upper':<14} {'lower':<14} citation"]
        for r in rows:
            lower = r.lower.params.label if r.lower else "-"
            citation = r.lower.citation if r.lower else "-"
            mark = " *" if r.optimal else ""
            lines.append(f"{r.n_plus_k:>4}  {r.upper.label:<14} {lower:<14} {citation}{mark}")
        document = OutputDocument(
            format=fmt,
            payload={"D": args.D, "rows": [r.to_payload() for r in rows]},
            lines=lines,
            header=["n+k", "upper", "lower", "citation", "optimal"],
            rows=[[r.n_plus_k, r.upper.label, r.lower.params.label if r.lower else None,
                   r.lower.citation if r.lower else None, r.optimal] for r in rows],
        )
        return CommandResult(document)

    def _handle_oracle(self, args: argparse.Namespace, fmt: str) -> CommandResult:
        path = Path(args.fixture)
        code = read_fixture(path) if path.exists() else load_fixture(args.fixture)
        if args.purify:
            code = purify(code)
        if args.reduce:
            A, B = reduced_weights(code, parse_sites(args.reduce, code.n))
        else:
            A, B = group_sl_weights(code)
        result = code_check(A, B, A.trace)
        unitary = unitary_from_sl(A)
        S = shadow(unitary)
        if args.dense:
            if args.reduce:
                raise UsageError("--dense cannot be combined with --reduce")
            dense_A, dense_B = dense_weights(code_state_vectors(code), code.p, code.n)
            if (dense_A, dense_B) != (A, B):
                raise InconsistencyError(f"{code}: dense weights disagree with the group census")
        payload = {
            "code": code.name,
            "n": A.n,
            "p": code.p,
            "K": A.trace,
            "A": list(A.values),
            "B": list(B.values),
            "unitary": list(unitary.values),
            "shadow": list(S.values),
            "distance": result.distance,
            "pure": result.pure,
        }
        lines = [
            f"code: {code}" + (f" reduced over {args.reduce}" if args.reduce else ""),
            f"K: {format_rational(A.trace)}",
            f"A: {join_values(A.values)}",
            f"B: {join_values(B.values)}",
            f"A': {join_values(unitary.values)}",
            f"S: {join_values(S.values)}",
            f"distance: {result.distance}",
            f"pure: {'yes' if result.pure else 'no'}",
        ]
        rows = [[j, A[j], B[j], unitary[j], S[j]] for j in range(A.n + 1)]
        document = OutputDocument(fmt, payload, lines, ["j", "A", "B", "A'", "S"], rows)
        return CommandResult(document)

    def _handle_catalog(self, args: argparse.Namespace, fmt: str) -> CommandResult:
        codes = [
            c for c in self.catalog.known_codes(args.D)
            if args.family_sum is None or c.params.n_plus_k == args.family_sum
        ]
        lines = [f"{c.params.label:<14} n+k={c.params.n_plus_k:<3} {c.citation}" for c in codes]
        document = OutputDocument(
            format=fmt,
            payload={"D": args.D, "codes": [
                {"code": c.params.label, "n+k": c.params.n_plus_k, "citation": c.citation,
                 "family": c.family} for c in codes
            ]},
            lines=lines,
            header=["code", "n+k", "citation", "family"],
            rows=[[c.params.label, c.params.n_plus_k, c.citation, c.family] for c in codes],
        )
        return CommandResult(document)
