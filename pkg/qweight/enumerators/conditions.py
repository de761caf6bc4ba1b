# Area: Enumerators
# PRD: docs/prd-qweight.md
"""Projector conditions K*B_j >= A_j, with equality below the distance."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from qweight.enumerators.distribution import WeightDistribution, WeightKind
from qweight.shared.errors import DomainError, InconsistencyError


@dataclass(frozen=True)
class CodeCheckResult:
    distance: int
    pure: bool


def code_check(A: WeightDistribution, B: WeightDistribution,
               K: Union[int, Fraction]) -> CodeCheckResult:
    """Distance and purity from an (A, B) Shor-Laflamme pair.

    For K = 1 the pair satisfies K*B = A identically, so the distance is
    the first nonzero A_j with j >= 1.
    """
    if A.kind is not WeightKind.SL_PRIMARY or B.kind is not WeightKind.SL_DUAL:
        raise DomainError(f"expected (sl-primary, sl-dual), got ({A.kind.value}, {B.kind.value})")
    if A.n != B.n or A.D != B.D:
        raise DomainError(f"mismatched enumerators: n={A.n}/{B.n}, D={A.D}/{B.D}")
    K = Fraction(K)
    if K <= 0:
        raise DomainError(f"K must be positive, got {K}")
    for j, (a, b) in enumerate(zip(A.values, B.values)):
        if K * b < a:
            raise InconsistencyError(f"K*B_{j} = {K * b} < A_{j} = {a}")

    n = A.n
    if K == 1:
        distance = next((j for j in range(1, n + 1) if A.values[j] != 0), n + 1)
    else:
        distance = next((j for j in range(1, n + 1) if K * B.values[j] != A.values[j]), n + 1)
    pure = all(A.values[j] == 0 for j in range(1, distance))
    return CodeCheckResult(distance=distance, pure=pure)
