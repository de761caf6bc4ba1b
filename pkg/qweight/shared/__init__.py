"""Errors, configuration and logging shared by every layer."""
from qweight.shared.errors import (
    BudgetExceededError,
    CatalogError,
    ConfigError,
    DomainError,
    FixtureParseError,
    InconsistencyError,
    QWeightError,
    UsageError,
)

__all__ = [
    "QWeightError",
    "DomainError",
    "UsageError",
    "ConfigError",
    "BudgetExceededError",
    "InconsistencyError",
    "FixtureParseError",
    "CatalogError",
]
