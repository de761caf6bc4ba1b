# Area: CLI
# PRD: docs/prd-qweight.md
"""Output documents: table, csv or json, rationals always as "p/q"."""
import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Sequence


def format_rational(value: Fraction) -> str:
    """'p/q', or 'p' for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def jsonable(value: Any) -> Any:
    """Fractions to strings, enums to values, tuples to lists, recursively."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


def _csv_field(value: Any) -> str:
    """One CSV field; non-integer rationals are always quoted."""
    text = _cell(value)
    if isinstance(value, Fraction) and value.denominator != 1:
        return f'"{text}"'
    if not text:
        return text
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="").writerow([text])
    return buffer.getvalue()


def join_values(values: Sequence[Fraction]) -> str:
    return ",".join(format_rational(v) for v in values)


@dataclass
class OutputDocument:
    """A rendered result; every format is built from the same payload."""
    format: str
    payload: dict[str, Any]
    lines: list[str] = field(default_factory=list)
    header: list[str] = field(default_factory=list)
    rows: list[list[Any]] = field(default_factory=list)

    def render(self) -> str:
        if self.format == "json":
            return json.dumps(jsonable(self.payload), sort_keys=True, indent=2,
                              ensure_ascii=False) + "\n"
        if self.format == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            if self.header:
                writer.writerow(self.header)
            for row in self.rows:
                buffer.write(",".join(_csv_field(c) for c in row) + "\n")
            return buffer.getvalue()
        return "".join(line + "\n" for line in self.lines)


def parse_rationals(document: str) -> Any:
    """Inverse of jsonable for 'p/q' strings, used to read documents back."""
    def convert(value: Any) -> Any:
        if isinstance(value, str):
            try:
                return Fraction(value)
            except ValueError:
                return value
        if isinstance(value, list):
            return [convert(v) for v in value]
        if isinstance(value, dict):
            return {k: convert(v) for k, v in value.items()}
        return value
    return convert(json.loads(document))
