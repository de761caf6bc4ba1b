# Area: Shared
# PRD: docs/prd-qweight.md
"""Exception hierarchy.

Every error raised by the library derives from QWeightError so callers
(and the CLI) can map them to exit codes in one place.
"""
from typing import Optional


class QWeightError(Exception):
    """Base class for all library errors."""
    exit_code = 2


class DomainError(QWeightError, ValueError):
    """A precondition on the arguments does not hold."""


class UsageError(QWeightError):
    """Command-line usage that parsed but makes no sense."""


class ConfigError(QWeightError):
    """Configuration file missing a section or malformed."""


class BudgetExceededError(QWeightError):
    """Enumeration or dense simulation would exceed the configured budget."""

    def __init__(self, what: str, size: int, limit: int) -> None:
        super().__init__(f"{what}: {size} exceeds budget {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class InconsistencyError(QWeightError, ValueError):
    """An enumerator pair that no valid code can produce."""
    exit_code = 3


class FixtureParseError(QWeightError):
    """Malformed stabilizer fixture file."""

    def __init__(self, message: str, source: str = "<text>",
                 line: Optional[int] = None) -> None:
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")
        self.source = source
        self.line = line


class CatalogError(QWeightError):
    """Malformed catalog line."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        prefix = f"catalog line {line}: " if line is not None else "catalog: "
        super().__init__(prefix + message)
        self.line = line
