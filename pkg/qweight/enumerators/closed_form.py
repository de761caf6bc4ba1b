# Area: Enumerators
# PRD: docs/prd-qweight.md
"""Closed-form weight distributions of QMDS codes and AME states.

Trace convention tr(Pi) = D^k, so A_0 = A'_0 = D^(2k).
"""
import logging
from fractions import Fraction

from qweight.enumerators.distribution import CodeParams, WeightDistribution, WeightKind
from qweight.exactmath.binomials import binomial
from qweight.shared.errors import DomainError

logger = logging.getLogger(__name__)


def _closed_form_exponents(p: CodeParams) -> tuple[int, int]:
    """(k, 2*alpha) for QMDS or AME-form parameters."""
    if p.is_qmds and p.k >= 0:
        k = int(p.k)
        return k, p.n + k
    if p.is_ame:
        return 0, p.n
    raise DomainError(f"{p} is neither QMDS-form nor AME-form")


def qmds_unitary(p: CodeParams) -> WeightDistribution:
    """A'_j = C(n,j) D^(2k - min(2*alpha - j, j))."""
    k, two_alpha = _closed_form_exponents(p)
    D = Fraction(p.D)
    values = [
        binomial(p.n, j) * D ** (2 * k - min(two_alpha - j, j))
        for j in range(p.n + 1)
    ]
    return WeightDistribution.build(p.D, WeightKind.UNITARY_PRIMARY, D ** k, values)


def qmds_sl(p: CodeParams) -> WeightDistribution:
    """A_j = C(n,j) sum_i C(j,i) (-1)^(j-i) D^(2k + i - min(2*alpha - i, i))."""
    k, two_alpha = _closed_form_exponents(p)
    D = Fraction(p.D)
    terms = [D ** (2 * k + i - min(two_alpha - i, i)) for i in range(p.n + 1)]
    values = []
    for j in range(p.n + 1):
        inner = sum(
            (binomial(j, i) * (-1) ** (j - i) * terms[i] for i in range(j + 1)),
            Fraction(0),
        )
        values.append(binomial(p.n, j) * inner)
    w = WeightDistribution.build(p.D, WeightKind.SL_PRIMARY, D ** k, values)
    negative = negative_entries(w)
    if negative:
        logger.warning("%s: negative Shor-Laflamme weights at %s", p, [j for j, _ in negative])
    return w


def negative_entries(w: WeightDistribution) -> list[tuple[int, Fraction]]:
    """(j, value) for every negative entry."""
    return [(j, v) for j, v in enumerate(w.values) if v < 0]
