# Area: Enumerators
# PRD: docs/prd-qweight.md
"""Conversions between Shor-Laflamme, unitary, dual and shadow enumerators.

Each transform has a direct coefficient formula; the *_poly variants go
through a linear substitution on the bivariate form instead and serve as
an independent second path.
"""
from fractions import Fraction

from qweight.enumerators.distribution import WeightDistribution, WeightKind
from qweight.exactmath.binomials import binomial, krawtchouk_matrix
from qweight.exactmath.forms import substitute
from qweight.shared.errors import DomainError

_TO_UNITARY = {
    WeightKind.SL_PRIMARY: WeightKind.UNITARY_PRIMARY,
    WeightKind.SL_DUAL: WeightKind.UNITARY_DUAL,
}
_TO_SL = {v: k for k, v in _TO_UNITARY.items()}


def _require(w: WeightDistribution, *kinds: WeightKind) -> None:
    if w.kind not in kinds:
        names = ", ".join(k.value for k in kinds)
        raise DomainError(f"expected kind in {{{names}}}, got {w.kind.value}")


def unitary_from_sl(w: WeightDistribution) -> WeightDistribution:
    """A'_j = D^-j sum_{i<=j} C(n-i, n-j) A_i."""
    _require(w, *_TO_UNITARY)
    n, D = w.n, Fraction(w.D)
    values = [
        sum((binomial(n - i, n - j) * w.values[i] for i in range(j + 1)), Fraction(0)) / D ** j
        for j in range(n + 1)
    ]
    return w.with_values(_TO_UNITARY[w.kind], values)


def sl_from_unitary(w: WeightDistribution) -> WeightDistribution:
    """Forward substitution through the triangular system of unitary_from_sl."""
    _require(w, *_TO_SL)
    n, D = w.n, Fraction(w.D)
    values: list[Fraction] = []
    for j in range(n + 1):
        lower = sum((binomial(n - i, n - j) * values[i] for i in range(j)), Fraction(0))
        values.append(D ** j * w.values[j] - lower)
    return w.with_values(_TO_SL[w.kind], values)


def sl_from_unitary_poly(w: WeightDistribution) -> WeightDistribution:
    """A(x, y) = A'(x - y, D y)."""
    _require(w, *_TO_SL)
    form = substitute(w.to_form(), 1, -1, 0, w.D)
    return w.with_values(_TO_SL[w.kind], form.coeffs)


def dual_unitary(w: WeightDistribution) -> WeightDistribution:
    """B'_j = A'_(n-j)."""
    _require(w, WeightKind.UNITARY_PRIMARY)
    return w.with_values(WeightKind.UNITARY_DUAL, reversed(w.values))


def macwilliams_dual(w: WeightDistribution) -> WeightDistribution:
    """Dual Shor-Laflamme weights B from A, through the unitary weights."""
    _require(w, WeightKind.SL_PRIMARY)
    return sl_from_unitary(dual_unitary(unitary_from_sl(w)))


def shadow(w: WeightDistribution) -> WeightDistribution:
    """S_j = sum_l K_(n-j)(l, n) A'_l."""
    _require(w, WeightKind.UNITARY_PRIMARY)
    n = w.n
    kmat = krawtchouk_matrix(n)
    values = [
        sum((kmat[n - j][ell] * w.values[ell] for ell in range(n + 1)), Fraction(0))
        for j in range(n + 1)
    ]
    return w.with_values(WeightKind.SHADOW, values)


def shadow_poly(w: WeightDistribution) -> WeightDistribution:
    """S(x, y) = A'(x + y, y - x)."""
    _require(w, WeightKind.UNITARY_PRIMARY)
    form = substitute(w.to_form(), 1, 1, -1, 1)
    return w.with_values(WeightKind.SHADOW, form.coeffs)
