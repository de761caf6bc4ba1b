# Area: Stabilizer Oracle
# PRD: docs/fixture_format.md
"""Parser for stabilizer fixture files.

    # comment
    name  five-qubit
    prime 2
    [stabilizer]
    + X Z Z X I
    [logical]
    + X X X X X
    + Z Z Z Z Z

Phase field: '+', '-', '+i', '-i' (qubits only) or 'w^k' for
exp(i pi k / p). Symbols: I, Y (qubits only), X^a Z^b with either
factor optional and exponents defaulting to 1.
"""
import re
from pathlib import Path
from typing import Optional, Union

from qweight.oracle.pauli import PauliElement, is_prime
from qweight.oracle.stabilizer import StabilizerCode, make_code
from qweight.shared.errors import DomainError, FixtureParseError

DATA_DIR = Path(__file__).parent / "data"
SUFFIX = ".stab"

_SYMBOL = re.compile(r"^(?:X(?:\^(\d+))?)?(?:Z(?:\^(\d+))?)?$")
_PHASE_W = re.compile(r"^w\^(-?\d+)$")
_SECTIONS = ("[stabilizer]", "[logical]")


class _Parser:
    def __init__(self, source: str) -> None:
        self.source = source
        self.name = ""
        self.p: Optional[int] = None
        self.n: Optional[int] = None
        self.section: Optional[str] = None
        self.gens: dict[str, list[PauliElement]] = {}

    def fail(self, message: str, line: int) -> FixtureParseError:
        return FixtureParseError(message, self.source, line)

    def phase(self, token: str, line: int) -> int:
        p = self.p
        if token == "+":
            return 0
        if token == "-":
            return p
        if token in ("+i", "-i"):
            if p != 2:
                raise self.fail(f"phase {token!r} only allowed for p=2", line)
            return 1 if token == "+i" else 3
        m = _PHASE_W.match(token)
        if m:
            return int(m.group(1)) % (2 * p)
        raise self.fail(f"bad phase field {token!r}", line)

    def symbol(self, token: str, line: int) -> tuple[int, int, int]:
        """(x, z, extra phase)."""
        if token == "I":
            return 0, 0, 0
        if token == "Y":
            if self.p != 2:
                raise self.fail("symbol 'Y' only allowed for p=2", line)
            return 1, 1, 1
        m = _SYMBOL.match(token)
        if not token or not m:
            raise self.fail(f"bad symbol {token!r}", line)
        a = int(m.group(1) or 1) if "X" in token else 0
        b = int(m.group(2) or 1) if "Z" in token else 0
        if a >= self.p or b >= self.p:
            raise self.fail(f"exponent in {token!r} must be below p={self.p}", line)
        return a, b, 0

    def header(self, key: str, value: str, line: int) -> None:
        if key == "name":
            self.name = value
        elif key == "prime":
            try:
                self.p = int(value)
            except ValueError:
                raise self.fail(f"prime must be an integer, got {value!r}", line) from None
            if not is_prime(self.p):
                raise self.fail(f"p={self.p} is not prime", line)
        else:
            raise self.fail(f"unknown header {key!r}", line)

    def generator(self, tokens: list[str], line: int) -> None:
        if self.p is None:
            raise self.fail("'prime' must come before any generator", line)
        if len(tokens) < 2:
            raise self.fail("generator needs a phase field and at least one symbol", line)
        phase = self.phase(tokens[0], line)
        parsed = [self.symbol(t, line) for t in tokens[1:]]
        if self.n is None:
            self.n = len(parsed)
        elif len(parsed) != self.n:
            raise self.fail(f"expected {self.n} symbols, got {len(parsed)}", line)
        xvec = tuple(a for a, _, _ in parsed)
        zvec = tuple(b for _, b, _ in parsed)
        phase += sum(extra for _, _, extra in parsed)
        self.gens[self.section].append(PauliElement(self.n, self.p, xvec, zvec, phase))

    def feed(self, raw: str, line: int) -> None:
        text = raw.split("#", 1)[0].strip()
        if not text:
            return
        if text.startswith("["):
            if text not in _SECTIONS:
                raise self.fail(f"unknown section {text!r}", line)
            self.section = text.strip("[]")
            if self.section in self.gens:
                raise self.fail(f"duplicate section {text!r}", line)
            self.gens[self.section] = []
            return
        tokens = text.split()
        if self.section is None:
            if len(tokens) != 2:
                raise self.fail(f"expected 'key value', got {text!r}", line)
            self.header(tokens[0], tokens[1], line)
            return
        self.generator(tokens, line)


def parse_fixture(text: str, source: str = "<text>") -> StabilizerCode:
    """Parse fixture text into a validated code."""
    parser = _Parser(source)
    for number, raw in enumerate(text.splitlines(), start=1):
        parser.feed(raw, number)
    if parser.p is None:
        raise FixtureParseError("missing 'prime' header", source)
    if "stabilizer" not in parser.gens:
        raise FixtureParseError("missing [stabilizer] section", source)
    if parser.n is None:
        raise FixtureParseError("no generators: length unknown", source)
    logicals = parser.gens.get("logical")
    try:
        return make_code(parser.p, parser.n, parser.gens["stabilizer"], logicals, name=parser.name)
    except DomainError as e:
        raise FixtureParseError(str(e), source) from e


def read_fixture(path: Union[str, Path]) -> StabilizerCode:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise FixtureParseError(f"cannot read: {e.strerror}", str(path)) from e
    return parse_fixture(text, str(path))


def shipped_fixtures() -> list[str]:
    return sorted(f.stem for f in DATA_DIR.glob(f"*{SUFFIX}"))


def load_fixture(name: str) -> StabilizerCode:
    """A shipped fixture by stem name, e.g. 'shor'."""
    path = DATA_DIR / f"{name}{SUFFIX}"
    if not path.exists():
        raise FixtureParseError(f"no shipped fixture named {name!r}", str(path))
    return read_fixture(path)
