# Area: Feasibility
# PRD: docs/prd-qweight.md
"""Layered feasibility verdicts."""
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from qweight.enumerators.distribution import CodeParams, WeightDistribution
from qweight.shared.errors import DomainError


class Status(Enum):
    TRIVIAL = "trivial"
    EXCLUDED = "excluded"
    NOT_EXCLUDED = "not-excluded"


class Reason(Enum):
    """Which layer excluded the parameters."""
    SINGLETON = "singleton"
    LENGTH_BOUND = "length-bound"
    SHADOW = "shadow"
    PROPAGATION = "propagation"
    PURIFICATION = "purification"


@dataclass(frozen=True)
class Witness:
    """Index j and value of a negative shadow coefficient."""
    index: int
    value: Fraction


@dataclass(frozen=True)
class FeasibilityVerdict:
    params: CodeParams
    status: Status
    reason: Optional[Reason] = None
    witness: Optional[Witness] = None
    citation: Optional[str] = None
    shadow: Optional[WeightDistribution] = None

    def __post_init__(self) -> None:
        if (self.status is Status.EXCLUDED) != (self.reason is not None):
            raise DomainError(f"{self.params}: status {self.status.value} with reason {self.reason}")
        if self.reason is Reason.SHADOW and (self.witness is None or self.witness.value >= 0):
            raise DomainError(f"{self.params}: shadow exclusion needs a negative witness")

    @property
    def excluded(self) -> bool:
        return self.status is Status.EXCLUDED

    def exclude(self, reason: Reason) -> "FeasibilityVerdict":
        """Same parameters, excluded by a derived rule."""
        return replace(self, status=Status.EXCLUDED, reason=reason, witness=None)

    def with_citation(self, citation: Optional[str]) -> "FeasibilityVerdict":
        return replace(self, citation=citation)

    def _dimension(self) -> Any:
        try:
            return self.params.K
        except DomainError:
            return None

    def to_payload(self) -> dict[str, Any]:
        """Plain dict with Fractions left for the output layer to render."""
        p = self.params
        payload: dict[str, Any] = {
            "code": p.label,
            "n": p.n,
            "k": p.k,
            "K": self._dimension(),
            "d": p.d,
            "D": p.D,
            "status": self.status.value,
            "reason": self.reason.value if self.reason else None,
            "witness": None,
            "citation": self.citation,
        }
        if self.witness is not None:
            payload["witness"] = {"j": self.witness.index, "value": self.witness.value}
        if self.shadow is not None:
            payload["shadow"] = list(self.shadow.values)
        return payload
