"""Command-line front end."""
from qweight.cli.main import main, run

__all__ = ["main", "run"]
