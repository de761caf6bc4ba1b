# Area: Feasibility
# PRD: docs/prd-qweight.md
"""Upper/lower bound tables for the highest distance in each family."""
import logging
from dataclasses import dataclass
from typing import Any, Optional

from qweight.enumerators.distribution import CodeParams
from qweight.feasibility.catalog import Catalog, KnownCode, load_catalog
from qweight.feasibility.family import family_scan
from qweight.shared.errors import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TableRow:
    n_plus_k: int
    upper: CodeParams
    lower: Optional[KnownCode]

    @property
    def optimal(self) -> bool:
        return self.lower is not None and self.lower.params == self.upper

    def to_payload(self) -> dict[str, Any]:
        return {
            "n+k": self.n_plus_k,
            "upper": self.upper.label,
            "lower": self.lower.params.label if self.lower else None,
            "citation": self.lower.citation if self.lower else None,
            "optimal": self.optimal,
        }


def default_max(D: int) -> int:
    """Largest n+k with nontrivial members, 2(D^2 - 1)."""
    return 2 * (D ** 2 - 1)


def make_table(D: int, max_n_plus_k: Optional[int] = None,
               catalog: Optional[Catalog] = None) -> list[TableRow]:
    """One row per even n+k from 4 to the maximum."""
    if D < 2:
        raise DomainError(f"local dimension must be >= 2, got {D}")
    top = default_max(D) if max_n_plus_k is None else max_n_plus_k
    if top < 4:
        raise DomainError(f"table maximum must be >= 4, got {top}")
    catalog = catalog or load_catalog()
    rows = []
    for total in range(4, top + 1, 2):
        scan = family_scan(total, D, catalog)
        rows.append(TableRow(total, scan.upper, catalog.best(total, D)))
    logger.info("table D=%d: %d rows", D, len(rows))
    return rows
