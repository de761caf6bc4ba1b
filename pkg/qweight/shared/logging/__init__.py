"""Verdict trace and logging setup."""
from qweight.shared.logging.verdict_logger import VerdictLogger, configure_logging

__all__ = ["VerdictLogger", "configure_logging"]
