# Area: Feasibility
# PRD: docs/catalog_format.md
"""Catalog of known QMDS constructions.

Each JSON line is a family of parameter triples over q (the local
dimension), with nested ranges and constraints written as sympy
expressions. Earlier lines win ties at equal distance; purified partners
rank after every direct entry.
"""
import ast
import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Iterator, Optional, Union

from sympy import Symbol, factorint, sympify
from sympy.core.sympify import SympifyError
from sympy.logic.boolalg import BooleanFalse, BooleanTrue

from qweight.enumerators.distribution import CodeParams
from qweight.shared.config import get_settings
from qweight.shared.errors import CatalogError, DomainError

logger = logging.getLogger(__name__)

VARIABLES = ("q", "d", "s", "a", "n", "m")
FUNCTIONS = ("Eq", "Ne", "Mod", "And", "Or", "Not", "floor", "ceiling", "binomial")
_LOCALS = {name: Symbol(name, integer=True) for name in VARIABLES}
REQUIRED_FIELDS = ("family", "citation", "q_constraint", "params")

_ALLOWED_NODES = (
    ast.Expression, ast.BinOp, ast.UnaryOp, ast.Compare, ast.Call, ast.Name, ast.Load,
    ast.Constant, ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow, ast.USub, ast.UAdd,
    ast.Lt, ast.LtE, ast.Gt, ast.GtE,
)


def _check_grammar(text: str, line: int, field: str) -> None:
    """Reject anything outside arithmetic, comparisons and the catalog functions."""
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as e:
        raise CatalogError(f"{field}: cannot parse {text!r}: {e.msg}", line) from e
    callees = {id(node.func) for node in ast.walk(tree) if isinstance(node, ast.Call)}
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED_NODES):
            raise CatalogError(f"{field}: {type(node).__name__} not allowed in {text!r}", line)
        if isinstance(node, ast.Constant) and not isinstance(node.value, (int, bool)):
            raise CatalogError(f"{field}: constant {node.value!r} not allowed in {text!r}", line)
        if isinstance(node, ast.Name):
            allowed = FUNCTIONS if id(node) in callees else VARIABLES
            if node.id not in allowed:
                raise CatalogError(f"{field}: unknown name {node.id!r} in {text!r}", line)
        if isinstance(node, ast.Call):
            if not isinstance(node.func, ast.Name) or node.func.id not in FUNCTIONS:
                raise CatalogError(f"{field}: only {', '.join(FUNCTIONS)} may be called", line)
            if node.keywords:
                raise CatalogError(f"{field}: keyword arguments not allowed in {text!r}", line)
        if isinstance(node, ast.Compare) and len(node.ops) != 1:
            raise CatalogError(f"{field}: chained comparison in {text!r}", line)


def _expr(text: Any, line: int, field: str):
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise CatalogError(f"{field}: expected an expression, got {text!r}", line)
    text = str(text)
    _check_grammar(text, line, field)
    try:
        # plain True/False come back as Python bools
        return sympify(sympify(text, locals=_LOCALS))
    except (SympifyError, SyntaxError, TypeError, ValueError) as e:
        raise CatalogError(f"{field}: cannot parse {text!r}: {e}", line) from e


def _int(expr, env: dict, line: int, field: str) -> int:
    value = expr.subs(env)
    if not value.is_Integer:
        raise CatalogError(f"{field} does not evaluate to an integer: {value}", line)
    return int(value)


def _holds(expr, env: dict, line: int, field: str) -> bool:
    value = expr.subs(env)
    if not isinstance(value, (bool, BooleanTrue, BooleanFalse)):
        raise CatalogError(f"{field} does not evaluate to a truth value: {value}", line)
    return bool(value)


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog line, parsed."""
    line: int
    family: str
    citation: str
    q_constraint: Any
    ranges: tuple[tuple[str, Any, Any], ...]
    where: tuple[Any, ...]
    params: tuple[Any, Any, Any]

    @classmethod
    def parse(cls, raw: dict, line: int) -> "CatalogEntry":
        missing = [f for f in REQUIRED_FIELDS if f not in raw]
        if missing:
            raise CatalogError(f"missing field(s) {', '.join(missing)}", line)
        params = raw["params"]
        if not isinstance(params, list) or len(params) != 3:
            raise CatalogError("params must be a triple [n, k, d]", line)
        ranges = []
        for name, bounds in raw.get("ranges", {}).items():
            if name not in VARIABLES:
                raise CatalogError(f"unknown range variable {name!r}", line)
            ranges.append((name, _expr(bounds[0], line, f"{name} min"), _expr(bounds[1], line, f"{name} max")))
        if "d_range" in raw:
            lo, hi = raw["d_range"]
            ranges.append(("d", _expr(lo, line, "d_range min"), _expr(hi, line, "d_range max")))
        return cls(
            line=line,
            family=str(raw["family"]),
            citation=str(raw["citation"]),
            q_constraint=_expr(raw["q_constraint"], line, "q_constraint"),
            ranges=tuple(ranges),
            where=tuple(_expr(w, line, "where") for w in raw.get("where", [])),
            params=tuple(_expr(p, line, "params") for p in params),
        )

    def _assignments(self, env: dict, depth: int = 0) -> Iterator[dict]:
        if depth == len(self.ranges):
            yield env
            return
        name, lo, hi = self.ranges[depth]
        start = _int(lo, env, self.line, f"{name} min")
        stop = _int(hi, env, self.line, f"{name} max")
        for value in range(start, stop + 1):
            yield from self._assignments({**env, _LOCALS[name]: value}, depth + 1)

    def instantiate(self, q: int) -> Iterator[CodeParams]:
        """Every parameter set this entry yields at local dimension q."""
        env = {_LOCALS["q"]: q}
        if not _holds(self.q_constraint, env, self.line, "q_constraint"):
            return
        for assignment in self._assignments(env):
            if not all(_holds(w, assignment, self.line, "where") for w in self.where):
                continue
            n, k, d = (_int(p, assignment, self.line, "params") for p in self.params)
            if k != n - 2 * d + 2:
                raise CatalogError(f"[[{n},{k},{d}]] is not QMDS-form", self.line)
            if k < 0 or d < 1 or d > n:
                continue
            yield CodeParams(n, k, d, q)


@dataclass(frozen=True)
class KnownCode:
    params: CodeParams
    citation: str
    family: str
    priority: int
    purified: bool = False


def is_prime_power(q: int) -> bool:
    return q >= 2 and len(factorint(q)) == 1


class Catalog:
    """Parsed catalog with per-dimension closure."""

    def __init__(self, entries: list[CatalogEntry], source: str = "<memory>") -> None:
        self.entries = tuple(entries)
        self.source = source
        self._cache: dict[int, tuple[KnownCode, ...]] = {}

    def known_codes(self, q: int) -> tuple[KnownCode, ...]:
        """Instantiated entries, then purified partners of k=1 entries."""
        if q not in self._cache:
            self._cache[q] = self._close(q) if is_prime_power(q) else ()
            logger.info("catalog %s: %d codes for q=%d", self.source, len(self._cache[q]), q)
        return self._cache[q]

    def _close(self, q: int) -> tuple[KnownCode, ...]:
        direct = [
            KnownCode(params, entry.citation, entry.family, priority)
            for priority, entry in enumerate(self.entries)
            for params in entry.instantiate(q)
        ]
        offset = len(self.entries)
        purified = [
            KnownCode(CodeParams(c.params.n + 1, 0, c.params.d + 1, q),
                      f"{c.citation} (purified)", c.family, offset + c.priority, purified=True)
            for c in direct
            if c.params.k == 1 and c.params.d >= 3
        ]
        return tuple(direct + purified)

    def best(self, n_plus_k: int, q: int) -> Optional[KnownCode]:
        """Highest distance with n+k fixed; ties go to the lowest priority."""
        best: Optional[KnownCode] = None
        for code in self.known_codes(q):
            if code.params.n_plus_k != n_plus_k:
                continue
            if best is None or code.params.d > best.params.d:
                best = code
        return best

    def citation_for(self, params: CodeParams) -> Optional[str]:
        """Citation of a known code from which params descends (same n+k, distance >= d)."""
        if not params.is_qmds:
            return None
        top = self.best(params.n_plus_k, params.D)
        if top is None or top.params.d < params.d:
            return None
        return top.citation


def load_catalog(path: Union[str, Path, None] = None) -> Catalog:
    """Parse a catalog file; defaults to the configured path."""
    path = Path(path) if path is not None else get_settings().catalog_path
    return _load_cached(str(path.resolve()))


@lru_cache(maxsize=8)
def _load_cached(path: str) -> Catalog:
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as e:
        raise CatalogError(f"cannot read {path}: {e.strerror}") from e
    entries = []
    for number, text in enumerate(lines, start=1):
        text = text.strip()
        if not text or text.startswith("//"):
            continue
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise CatalogError(f"invalid JSON: {e.msg}", number) from e
        if not isinstance(raw, dict):
            raise CatalogError("each line must be a JSON object", number)
        entries.append(CatalogEntry.parse(raw, number))
    logger.debug("loaded %d catalog entries from %s", len(entries), path)
    return Catalog(entries, source=path)


def catalog_lower(n_plus_k: int, D: int, catalog: Optional[Catalog] = None) -> Optional[KnownCode]:
    """Best known member of the family n+k at local dimension D, or None."""
    if n_plus_k < 2:
        raise DomainError(f"n+k must be >= 2, got {n_plus_k}")
    catalog = catalog or load_catalog()
    return catalog.best(n_plus_k, D)
