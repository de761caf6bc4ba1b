# Area: Stabilizer Oracle
# PRD: docs/prd-qweight.md
"""Validated stabilizer codes over prime-dimensional systems."""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from qweight.oracle.pauli import (
    PauliElement,
    commutant_basis,
    gram_mod_p,
    is_prime,
    rank_mod_p,
    stack,
)
from qweight.shared.errors import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StabilizerCode:
    """Stabilizer group generators plus logical pairs (X_1, Z_1, X_2, Z_2, ...)."""
    p: int
    n: int
    stab_gens: tuple[PauliElement, ...]
    logical_gens: Optional[tuple[PauliElement, ...]] = None
    name: str = ""

    @property
    def k(self) -> int:
        return self.n - len(self.stab_gens)

    @property
    def K(self) -> int:
        return self.p ** self.k

    @property
    def stab_matrix(self) -> np.ndarray:
        return stack(self.stab_gens, self.n)

    @property
    def logical_matrix(self) -> np.ndarray:
        return stack(self.logical_gens or (), self.n)

    @property
    def is_state(self) -> bool:
        return self.k == 0

    def __str__(self) -> str:
        label = f"[[{self.n},{self.k}]]_{self.p}"
        return f"{self.name} {label}" if self.name else label


def _check_generators(p: int, n: int, gens: Sequence[PauliElement], what: str) -> None:
    for g in gens:
        if g.n != n or g.p != p:
            raise DomainError(f"{what} {g} has n={g.n}, p={g.p}; expected n={n}, p={p}")
        if not g.squares_to_identity():
            raise DomainError(f"{what} {g}: phase inconsistency, E^p != +I")


def _complete_logicals(stab: np.ndarray, n: int, p: int) -> list[np.ndarray]:
    """Symplectic Gram-Schmidt on a complement of the stabilizer in its normalizer."""
    normalizer = commutant_basis(stab, n, p)
    span = stab.copy()
    rank = rank_mod_p(span, p)
    complement: list[np.ndarray] = []
    for v in normalizer:
        trial = np.vstack([span, v]) if len(span) else v[None, :]
        r = rank_mod_p(trial, p)
        if r > rank:
            span, rank = trial, r
            complement.append(v % p)

    pairs: list[np.ndarray] = []
    while complement:
        c1 = complement.pop(0)
        products = [int(gram_mod_p(c1[None, :], c[None, :], p)[0, 0]) for c in complement]
        partner = next((i for i, s in enumerate(products) if s), None)
        if partner is None:
            raise DomainError("normalizer complement is degenerate; cannot pair logicals")
        c2 = (complement.pop(partner) * pow(products[partner], -1, p)) % p
        rest = []
        for c in complement:
            with_c1 = int(gram_mod_p(c[None, :], c1[None, :], p)[0, 0])
            with_c2 = int(gram_mod_p(c[None, :], c2[None, :], p)[0, 0])
            rest.append((c - with_c2 * c1 + with_c1 * c2) % p)
        complement = rest
        pairs.extend([c1, c2])
    return pairs


def _check_logicals(stab: np.ndarray, logicals: np.ndarray, n: int, p: int) -> None:
    if len(logicals) % 2:
        raise DomainError(f"logical generators come in pairs, got {len(logicals)}")
    if len(stab) and np.any(gram_mod_p(logicals, stab, p)):
        raise DomainError("a logical generator does not commute with the stabilizer")
    gram = gram_mod_p(logicals, logicals, p)
    for i in range(len(logicals)):
        for j in range(len(logicals)):
            paired = i // 2 == j // 2 and i != j
            if paired and gram[i, j] == 0:
                raise DomainError(f"logical pair {i // 2 + 1} commutes; expected a conjugate pair")
            if not paired and gram[i, j] != 0:
                raise DomainError(f"logicals {i + 1} and {j + 1} do not commute")
    full = np.vstack([stab, logicals]) if len(stab) else logicals
    if rank_mod_p(full, p) != len(full):
        raise DomainError("logical generators are dependent on the stabilizer")


def make_code(p: int, n: int, stab_gens: Sequence[PauliElement],
              logical_gens: Optional[Sequence[PauliElement]] = None,
              name: str = "") -> StabilizerCode:
    """Validate generators and complete the logical operators if absent."""
    if not is_prime(p):
        raise DomainError(f"p={p} is not prime")
    if n < 1:
        raise DomainError(f"length must be >= 1, got {n}")
    stab_gens = tuple(stab_gens)
    _check_generators(p, n, stab_gens, "stabilizer generator")
    if len(stab_gens) > n:
        raise DomainError(f"{len(stab_gens)} generators on {n} systems cannot be independent")
    stab = stack(stab_gens, n)
    if len(stab):
        gram = gram_mod_p(stab, stab, p)
        if np.any(gram):
            i, j = (int(t) for t in np.argwhere(gram)[0])
            raise DomainError(f"stabilizer generators {i + 1} and {j + 1} do not commute")
        if rank_mod_p(stab, p) != len(stab):
            raise DomainError("stabilizer generators are dependent")

    if logical_gens is None:
        vectors = _complete_logicals(stab, n, p)
        logicals = tuple(PauliElement.from_vector(v, p) for v in vectors)
        logger.debug("completed %d logical generators for %s", len(logicals), name or f"n={n}")
    else:
        logicals = tuple(logical_gens)
        _check_generators(p, n, logicals, "logical generator")
        if logicals:
            _check_logicals(stab, stack(logicals, n), n, p)
        if len(logicals) != 2 * (n - len(stab_gens)):
            raise DomainError(
                f"expected {2 * (n - len(stab_gens))} logical generators, got {len(logicals)}"
            )
    return StabilizerCode(p=p, n=n, stab_gens=stab_gens, logical_gens=logicals, name=name)


def purify(code: StabilizerCode) -> StabilizerCode:
    """Stabilizer state on n+k systems, each logical pair entangled with a reference site."""
    if code.k == 0:
        return code
    if code.logical_gens is None:
        raise DomainError(f"{code}: purification needs logical generators")
    k, n, p = code.k, code.n, code.p
    gens = [
        PauliElement(n + k, p, g.xvec + (0,) * k, g.zvec + (0,) * k, g.phase)
        for g in code.stab_gens
    ]
    for i in range(k):
        lx, lz = code.logical_gens[2 * i], code.logical_gens[2 * i + 1]
        pairing = lx.symplectic(lz)
        unit = [0] * k
        unit[i] = 1
        # X_R and Z_R^(-pairing) cancel the logical commutation phase
        gens.append(lx.extend(unit, [0] * k))
        gens.append(lz.extend([0] * k, [(-pairing * u) % p for u in unit]))
    return make_code(p, n + k, gens, logical_gens=(), name=f"{code.name} purified".strip())
