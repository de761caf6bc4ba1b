# Area: Feasibility
# PRD: docs/prd-qweight.md
"""Scans of QMDS families, the chains of parameters sharing n+k."""
from dataclasses import dataclass
from typing import Optional

from qweight.enumerators.distribution import CodeParams
from qweight.feasibility.bounds import CitationSource, check
from qweight.feasibility.verdict import FeasibilityVerdict, Reason, Status
from qweight.shared.errors import DomainError
from qweight.shared.logging.verdict_logger import VerdictLogger


@dataclass(frozen=True)
class FamilyScan:
    n_plus_k: int
    D: int
    upper: CodeParams
    upper_verdict: FeasibilityVerdict
    verdict_chain: tuple[FeasibilityVerdict, ...]

    def verdict_for(self, d: int) -> FeasibilityVerdict:
        return next(v for v in self.verdict_chain if v.params.d == d)


def _pair_purification(chain: list[FeasibilityVerdict]) -> None:
    """The k=0 member and the k=1 member below it stand or fall together."""
    if len(chain) < 2 or chain[1].params.d < 3:
        return
    top, second = chain[0], chain[1]
    if top.excluded and not second.excluded:
        chain[1] = second.exclude(Reason.PURIFICATION)
    elif second.excluded and not top.excluded:
        chain[0] = top.exclude(Reason.PURIFICATION)


def _propagate(chain: list[FeasibilityVerdict]) -> None:
    """Everything above the lowest excluded distance is excluded too."""
    excluded = [v.params.d for v in chain if v.excluded]
    if not excluded:
        return
    lowest = min(excluded)
    for i, v in enumerate(chain):
        if v.params.d > lowest and not v.excluded:
            chain[i] = v.exclude(Reason.PROPAGATION)


def family_scan(n_plus_k: int, D: int,
                catalog: Optional[CitationSource] = None) -> FamilyScan:
    """Verdicts for every member, highest distance first, and the surviving top member."""
    if n_plus_k < 4 or n_plus_k % 2:
        raise DomainError(f"family parameter n+k must be even and >= 4, got {n_plus_k}")
    if D < 2:
        raise DomainError(f"local dimension must be >= 2, got {D}")
    alpha = n_plus_k // 2
    VerdictLogger.set_family_context(n_plus_k, D)

    chain = [check(CodeParams.family_member(alpha, d, D), catalog, log=False)
             for d in range(alpha + 1, 2, -1)]
    _pair_purification(chain)
    _propagate(chain)
    chain += [check(CodeParams.family_member(alpha, d, D), catalog, log=False) for d in (2, 1)]

    for v in chain:
        witness = f"S_{v.witness.index}={v.witness.value}" if v.witness else None
        VerdictLogger.log_verdict(v.params.label, v.status.value,
                                  v.reason.value if v.reason else None, witness)
    upper_verdict = next(v for v in chain if not v.excluded)
    VerdictLogger.log_upper(str(upper_verdict.params))
    VerdictLogger.set_check_context()
    return FamilyScan(
        n_plus_k=n_plus_k,
        D=D,
        upper=upper_verdict.params,
        upper_verdict=upper_verdict,
        verdict_chain=tuple(chain),
    )
