# Area: Verdict Logging
# PRD: docs/LOGGER_OUTPUT.md
"""Verdict Logger - colored one-line trace of feasibility decisions.

Writes to standard error so standard output stays a clean document.
Context: the family being scanned (n+k, D) or a single check.
"""
import logging
import sys
from datetime import datetime
from typing import Optional, TextIO

from qweight.shared.logging.constants import (
    Colors, LOG_FORMAT, REASON_DISPLAY_NAMES, STATUS_COLORS
)


class VerdictLogger:
    """Logger for verdict events."""
    _context: str = "CHECK"
    _enabled: bool = False
    _color: bool = True
    _stream: Optional[TextIO] = None

    @classmethod
    def configure(cls, enabled: bool, color: bool = True,
                  stream: Optional[TextIO] = None) -> None:
        cls._enabled = enabled
        cls._color = color
        cls._stream = stream

    @classmethod
    def set_family_context(cls, n_plus_k: int, D: int) -> None:
        """Set context for the members of one family."""
        cls._context = f"FAMILY n+k={n_plus_k} D={D}"

    @classmethod
    def set_check_context(cls) -> None:
        cls._context = "CHECK"

    @classmethod
    def _paint(cls, color: str, text: str) -> str:
        if not cls._color:
            return text
        return f"{color}{text}{Colors.RESET}"

    @classmethod
    def _format_time(cls) -> str:
        return datetime.now().strftime("%H:%M:%S")

    @classmethod
    def _emit(cls, line: str) -> None:
        if cls._enabled:
            print(line, file=cls._stream or sys.stderr)

    @classmethod
    def format_verdict(cls, label: str, status: str, reason: Optional[str] = None,
                       witness: Optional[str] = None) -> str:
        """Pipe-separated verdict line without the timestamp."""
        reason_text = REASON_DISPLAY_NAMES.get(reason, reason or "-")
        return (
            f"{cls._context:<22} | {label:<14} | {status.upper():<12} | "
            f"{reason_text:<12} | WITNESS: {witness or '-'}"
        )

    @classmethod
    def log_verdict(cls, label: str, status: str, reason: Optional[str] = None,
                    witness: Optional[str] = None) -> None:
        """Log one verdict (color by status)."""
        line = f"{cls._format_time()} | " + cls.format_verdict(label, status, reason, witness)
        cls._emit(cls._paint(STATUS_COLORS.get(status, Colors.RESET), line))

    @classmethod
    def log_upper(cls, label: str) -> None:
        """Log the surviving member of a family (BOLD)."""
        cls._emit(cls._paint(Colors.BOLD, f"{cls._format_time()} | {cls._context:<22} | UPPER {label}"))

    @classmethod
    def log_error(cls, message: str) -> None:
        """Log an error message (RED). Always shown."""
        line = f"[ERROR] {cls._format_time()} | {message}"
        print(cls._paint(Colors.RED, line), file=cls._stream or sys.stderr)


def configure_logging(level: str = "WARNING", color: bool = True,
                      verbose: bool = False) -> None:
    """Set up module loggers and the verdict trace."""
    numeric = logging.DEBUG if verbose else getattr(logging, level.upper(), logging.WARNING)
    logging.basicConfig(level=numeric, format=LOG_FORMAT, stream=sys.stderr, force=True)
    VerdictLogger.configure(enabled=numeric <= logging.INFO, color=color)


# Convenience functions - delegate to VerdictLogger class methods
def set_family_context(n_plus_k: int, D: int): VerdictLogger.set_family_context(n_plus_k, D)
def set_check_context(): VerdictLogger.set_check_context()
def log_verdict(label: str, status: str, reason: str = None, witness: str = None):
    VerdictLogger.log_verdict(label, status, reason, witness)
def log_upper(label: str): VerdictLogger.log_upper(label)
def log_error(message: str): VerdictLogger.log_error(message)
