# Area: Feasibility
# PRD: docs/prd-qweight.md
"""Singleton, length and shadow layers for single parameter sets."""
import logging
from fractions import Fraction
from typing import Optional, Protocol

from qweight.enumerators.closed_form import qmds_unitary
from qweight.enumerators.distribution import CodeParams
from qweight.enumerators.transforms import shadow
from qweight.feasibility.verdict import FeasibilityVerdict, Reason, Status, Witness
from qweight.shared.errors import DomainError
from qweight.shared.logging.verdict_logger import log_verdict

logger = logging.getLogger(__name__)


class CitationSource(Protocol):
    """Anything that can name a known construction for a parameter set."""

    def citation_for(self, params: CodeParams) -> Optional[str]:
        ...


def singleton_ok(p: CodeParams) -> bool:
    """K <= D^(n - 2(d-1))."""
    exponent = p.n - 2 * (p.d - 1)
    if p.dimension is not None:
        return Fraction(p.dimension) <= Fraction(p.D) ** exponent
    return p.k <= exponent


def length_bound_ok(p: CodeParams) -> bool:
    """n <= D^2 + d - 2 for QMDS parameters with d >= 3."""
    if not p.is_qmds or p.d < 3:
        raise DomainError(f"length bound applies to QMDS parameters with d >= 3, got {p}")
    return p.n <= p.D ** 2 + p.d - 2


def scott_ame_check(n: int, D: int) -> bool:
    """Length bound for AME states: 2(D^2-1) for even n, 2D(D+1)-1 for odd n."""
    if n < 4:
        raise DomainError(f"AME length bound needs n >= 4, got {n}")
    if n % 2 == 0:
        return n <= 2 * (D ** 2 - 1)
    return n <= 2 * D * (D + 1) - 1


def qubit_max_distance(n: int, pure_K1: bool) -> int:
    """Largest distance allowed by the qubit shadow bounds."""
    if n < 1:
        raise DomainError(f"length must be >= 1, got {n}")
    if pure_K1:
        return 2 * (n // 6) + (3 if n % 6 == 5 else 2)
    return 2 * ((n + 1) // 6) + (2 if n % 6 == 4 else 1)


def shadow_verdict(p: CodeParams) -> FeasibilityVerdict:
    """Excluded when some shadow coefficient is negative; witness is the smallest such j."""
    S = shadow(qmds_unitary(p))
    negative = next(((j, v) for j, v in enumerate(S.values) if v < 0), None)
    if negative is None:
        return FeasibilityVerdict(p, Status.NOT_EXCLUDED, shadow=S)
    j, value = negative
    return FeasibilityVerdict(p, Status.EXCLUDED, Reason.SHADOW, Witness(j, value), shadow=S)


def _layers(p: CodeParams) -> FeasibilityVerdict:
    if not singleton_ok(p):
        return FeasibilityVerdict(p, Status.EXCLUDED, Reason.SINGLETON)
    if p.d <= 2:
        return FeasibilityVerdict(p, Status.TRIVIAL)
    if p.is_qmds:
        if not length_bound_ok(p):
            return FeasibilityVerdict(p, Status.EXCLUDED, Reason.LENGTH_BOUND)
        return shadow_verdict(p)
    if p.is_ame:
        if not scott_ame_check(p.n, p.D):
            return FeasibilityVerdict(p, Status.EXCLUDED, Reason.LENGTH_BOUND)
        return shadow_verdict(p)
    logger.debug("%s is below the Singleton bound; no further layer applies", p)
    return FeasibilityVerdict(p, Status.NOT_EXCLUDED)


def check(p: CodeParams, catalog: Optional[CitationSource] = None,
          log: bool = True) -> FeasibilityVerdict:
    """Singleton, then trivial d <= 2, then length bound, then shadow."""
    verdict = _layers(p)
    if catalog is not None and not verdict.excluded:
        verdict = verdict.with_citation(catalog.citation_for(p))
    if log:
        witness = None
        if verdict.witness is not None:
            witness = f"S_{verdict.witness.index}={verdict.witness.value}"
        log_verdict(str(p), verdict.status.value,
                    verdict.reason.value if verdict.reason else None, witness)
    return verdict
