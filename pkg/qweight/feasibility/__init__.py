"""Feasibility layers, family scans, the construction catalog and tables."""
from qweight.feasibility.bounds import (
    check,
    length_bound_ok,
    qubit_max_distance,
    scott_ame_check,
    shadow_verdict,
    singleton_ok,
)
from qweight.feasibility.catalog import (
    Catalog,
    CatalogEntry,
    KnownCode,
    catalog_lower,
    is_prime_power,
    load_catalog,
)
from qweight.feasibility.family import FamilyScan, family_scan
from qweight.feasibility.tables import TableRow, make_table
from qweight.feasibility.verdict import FeasibilityVerdict, Reason, Status, Witness

__all__ = [
    "singleton_ok",
    "length_bound_ok",
    "scott_ame_check",
    "qubit_max_distance",
    "shadow_verdict",
    "check",
    "FamilyScan",
    "family_scan",
    "Catalog",
    "CatalogEntry",
    "KnownCode",
    "catalog_lower",
    "load_catalog",
    "is_prime_power",
    "TableRow",
    "make_table",
    "FeasibilityVerdict",
    "Reason",
    "Status",
    "Witness",
]
