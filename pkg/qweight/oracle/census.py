# Area: Stabilizer Oracle
# PRD: docs/prd-qweight.md
"""Weights of stabilizer codes by enumerating their groups.

Counting is projective: each group element is counted once whatever its
phase. Subgroups supported on a set of sites are found by linear algebra
over GF(p), so fine-grained unitary weights and entropies need no
enumeration.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable

import numpy as np

from qweight.enumerators.distribution import WeightDistribution, WeightKind
from qweight.oracle.pauli import (
    PauliElement,
    commutant_basis,
    nullspace_mod_p,
    rank_mod_p,
    row_reduce,
)
from qweight.oracle.stabilizer import StabilizerCode, make_code
from qweight.shared.config import get_settings
from qweight.shared.errors import BudgetExceededError, DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FineGrainedWeights:
    """Subset bitmask -> exact rational."""
    n: int
    D: int
    values: tuple[Fraction, ...]

    def __getitem__(self, mask: int) -> Fraction:
        return self.values[mask]

    def symmetrize(self) -> list[Fraction]:
        """Sum over all subsets of each size."""
        totals = [Fraction(0)] * (self.n + 1)
        for mask, v in enumerate(self.values):
            totals[bin(mask).count("1")] += v
        return totals


def subset_mask(sites: Iterable[int]) -> int:
    """Bitmask of 0-based site indices."""
    mask = 0
    for s in sites:
        mask |= 1 << s
    return mask


def _sites(mask: int, n: int) -> list[int]:
    return [i for i in range(n) if mask >> i & 1]


def _check_budget(code: StabilizerCode, normalizer: bool = True) -> None:
    """Group-size limits; the normalizer (p^(n+k)) only when it is enumerated."""
    limits = get_settings().oracle
    groups = [("n-k", code.n - code.k)]
    if normalizer:
        groups.append(("n+k", code.n + code.k))
    for label, exponent in groups:
        if exponent > limits.max_group_exponent:
            raise BudgetExceededError(f"{code}: group exponent {label}", exponent,
                                      limits.max_group_exponent)
        size = code.p ** exponent
        if size > limits.max_group_elements:
            raise BudgetExceededError(f"{code}: group size p^({label})", size,
                                      limits.max_group_elements)


def enumerate_span(rows: np.ndarray, n: int, p: int) -> np.ndarray:
    """Every vector in the GF(p) span of the rows, as an (p^r, 2n) array."""
    arr = np.zeros((1, 2 * n), dtype=np.uint8)
    for g in np.asarray(rows, dtype=np.int64) % p:
        g = g.astype(np.uint8)
        arr = np.concatenate([(arr + c * g) % p for c in range(p)])
    return arr


def support_masks(arr: np.ndarray, n: int) -> np.ndarray:
    acted = (arr[:, :n] != 0) | (arr[:, n:] != 0)
    return acted.astype(np.int64) @ (1 << np.arange(n, dtype=np.int64))


def weight_census(rows: np.ndarray, n: int, p: int) -> list[int]:
    """N_j: span elements of each weight."""
    arr = enumerate_span(rows, n, p)
    acted = (arr[:, :n] != 0) | (arr[:, n:] != 0)
    return [int(c) for c in np.bincount(acted.sum(axis=1), minlength=n + 1)]


def supported_subgroup(rows: np.ndarray, n: int, p: int, keep: list[int]) -> np.ndarray:
    """Basis of span(rows) elements acting only on `keep`, restricted to those sites."""
    rows = np.asarray(rows, dtype=np.int64)
    if len(rows) == 0:
        return np.zeros((0, 2 * len(keep)), dtype=np.int64)
    drop = [i for i in range(n) if i not in keep]
    drop_cols = drop + [n + i for i in drop]
    if drop_cols:
        combos = nullspace_mod_p(rows[:, drop_cols].T, p)
    else:
        combos = np.eye(len(rows), dtype=np.int64)
    if len(combos) == 0:
        return np.zeros((0, 2 * len(keep)), dtype=np.int64)
    full = (combos @ rows) % p
    keep_cols = keep + [n + i for i in keep]
    basis, _ = row_reduce(full[:, keep_cols], p)
    return basis


def _subgroup_dim(code: StabilizerCode, mask: int) -> int:
    basis = supported_subgroup(code.stab_matrix, code.n, code.p, _sites(mask, code.n))
    return rank_mod_p(basis, code.p)


def group_sl_weights(code: StabilizerCode) -> tuple[WeightDistribution, WeightDistribution]:
    """A_j = K^2 N_j(S), B_j = K N_j(N(S))."""
    _check_budget(code)
    n, p, K = code.n, code.p, code.K
    stab = code.stab_matrix
    a_counts = weight_census(stab, n, p)
    b_counts = weight_census(commutant_basis(stab, n, p), n, p)
    logger.debug("%s: |S|=%d, |N(S)|=%d", code, sum(a_counts), sum(b_counts))
    A = WeightDistribution.build(p, WeightKind.SL_PRIMARY, K, [K * K * c for c in a_counts])
    B = WeightDistribution.build(p, WeightKind.SL_DUAL, K, [K * c for c in b_counts])
    return A, B


@lru_cache(maxsize=64)
def _stabilizer_masks(code: StabilizerCode) -> np.ndarray:
    _check_budget(code, normalizer=False)
    return support_masks(enumerate_span(code.stab_matrix, code.n, code.p), code.n)


def _zeta(counts: list[int], n: int) -> list[int]:
    """Subset sums: out[S] = sum_{T subset S} counts[T]."""
    out = list(counts)
    for i in range(n):
        bit = 1 << i
        for mask in range(1 << n):
            if mask & bit:
                out[mask] += out[mask ^ bit]
    return out


def _walsh_hadamard(values: list[int], n: int) -> list[int]:
    """out[T] = sum_S (-1)^|S & T| values[S]."""
    out = list(values)
    h = 1
    while h < 1 << n:
        for start in range(0, 1 << n, 2 * h):
            for i in range(start, start + h):
                a, b = out[i], out[i + h]
                out[i], out[i + h] = a + b, a - b
        h *= 2
    return out


def _check_table_budget(n: int) -> None:
    limit = get_settings().oracle.shadow_direct_max_n
    if n > limit:
        raise BudgetExceededError("subset table length", n, limit)


@lru_cache(maxsize=64)
def _supported_counts(code: StabilizerCode) -> tuple[int, ...]:
    """|S_S| for every subset S."""
    _check_table_budget(code.n)
    masks = _stabilizer_masks(code)
    exact = [int(c) for c in np.bincount(masks, minlength=1 << code.n)]
    return tuple(_zeta(exact, code.n))


def fine_grained_sl(code: StabilizerCode, T: int) -> Fraction:
    """K^2 times the number of stabilizer elements with support exactly T."""
    masks = _stabilizer_masks(code)
    return Fraction(code.K ** 2 * int(np.count_nonzero(masks == T)))


def fine_grained_unitary(code: StabilizerCode, S: int) -> Fraction:
    """K^2 |S_S| / p^|S|."""
    _check_budget(code, normalizer=False)
    size = bin(S).count("1")
    return Fraction(code.K ** 2 * code.p ** _subgroup_dim(code, S), code.p ** size)


def fine_grained_table(code: StabilizerCode, kind: WeightKind) -> FineGrainedWeights:
    """All subsets at once, for kind sl-primary or unitary-primary."""
    _check_table_budget(code.n)
    n, p, K2 = code.n, code.p, code.K ** 2
    if kind is WeightKind.SL_PRIMARY:
        exact = np.bincount(_stabilizer_masks(code), minlength=1 << n)
        values = tuple(Fraction(K2 * int(c)) for c in exact)
    elif kind is WeightKind.UNITARY_PRIMARY:
        counts = _supported_counts(code)
        values = tuple(Fraction(K2 * c, p ** bin(m).count("1")) for m, c in enumerate(counts))
    else:
        raise DomainError(f"no fine-grained table for kind {kind.value}")
    return FineGrainedWeights(n=n, D=p, values=values)


@lru_cache(maxsize=64)
def _shadow_table(code: StabilizerCode) -> tuple[int, ...]:
    """p^n times the direct shadow sum, for every T."""
    n, p, K2 = code.n, code.p, code.K ** 2
    counts = _supported_counts(code)
    scaled = [K2 * c * p ** (n - bin(m).count("1")) for m, c in enumerate(counts)]
    return tuple(_walsh_hadamard(scaled, n))


def shadow_direct(code: StabilizerCode, T: int) -> Fraction:
    """sum_S (-1)^|S & T| A'_S."""
    return Fraction(_shadow_table(code)[T], code.p ** code.n)


def reduced_weights(code: StabilizerCode, V: int) -> tuple[WeightDistribution, WeightDistribution]:
    """Shor-Laflamme weights of p^|V| tr_V(Pi) on the remaining sites."""
    _check_budget(code)
    n, p = code.n, code.p
    traced = bin(V).count("1")
    if V >> n:
        raise DomainError(f"subset {V:b} exceeds {n} systems")
    if traced == 0:
        return group_sl_weights(code)
    keep = [i for i in range(n) if not V >> i & 1]
    m = len(keep)
    sub = supported_subgroup(code.stab_matrix, n, p, keep)
    size = p ** rank_mod_p(sub, p)
    K_red = code.K * p ** traced
    a_counts = weight_census(sub, m, p)
    b_counts = weight_census(commutant_basis(sub, m, p), m, p)
    scale = Fraction(K_red ** 2 * size, p ** m)
    A = WeightDistribution.build(p, WeightKind.SL_PRIMARY, K_red, [K_red ** 2 * c for c in a_counts])
    B = WeightDistribution.build(p, WeightKind.SL_DUAL, K_red, [scale * c for c in b_counts])
    return A, B


def _require_state(code: StabilizerCode) -> None:
    if code.k != 0:
        raise DomainError(f"{code}: entropy needs a pure state (k=0), got k={code.k}")


def subsystem_entropy(state: StabilizerCode, A: int) -> Fraction:
    """|A| - log_p |S_A|, in units of log p."""
    _require_state(state)
    if A >> state.n:
        raise DomainError(f"subset {A:b} exceeds {state.n} systems")
    return Fraction(bin(A).count("1") - _subgroup_dim(state, A))


def _ilog(value: int, p: int) -> int:
    e = 0
    while value > 1:
        value //= p
        e += 1
    return e


def entropy_profile(state: StabilizerCode) -> FineGrainedWeights:
    """Subsystem entropy for every subset."""
    _require_state(state)
    counts = _supported_counts(state)
    values = tuple(Fraction(bin(m).count("1") - _ilog(c, state.p)) for m, c in enumerate(counts))
    return FineGrainedWeights(n=state.n, D=state.p, values=values)


def random_stabilizer_state(p: int, n: int, rng: np.random.Generator) -> StabilizerCode:
    """A random stabilizer state grown one commuting generator at a time."""
    rows = np.zeros((0, 2 * n), dtype=np.int64)
    while len(rows) < n:
        basis = commutant_basis(rows, n, p)
        v = (rng.integers(0, p, size=len(basis)) @ basis) % p
        trial = np.vstack([rows, v])
        if rank_mod_p(trial, p) > len(rows):
            rows = trial
    gens = [PauliElement.from_vector(v, p) for v in rows]
    return make_code(p, n, gens, logical_gens=(), name="random")


def trade_off(state: StabilizerCode, code_sites: int, d: int) -> tuple[Fraction, Fraction]:
    """(S(R), (n - 2(d-1))/(d-1) * mean S(A) over (d-1)-subsets of the code sites).

    Sites code_sites.. of the state form the reference R.
    """
    _require_state(state)
    if d < 2:
        raise DomainError(f"trade-off needs d >= 2, got {d}")
    reference = subset_mask(range(code_sites, state.n))
    lhs = subsystem_entropy(state, reference)
    subsets = list(combinations(range(code_sites), d - 1))
    mean = sum((subsystem_entropy(state, subset_mask(s)) for s in subsets), Fraction(0)) / len(subsets)
    return lhs, Fraction(code_sites - 2 * (d - 1), d - 1) * mean
