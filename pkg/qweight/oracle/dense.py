# Area: Stabilizer Oracle
# PRD: docs/prd-qweight.md
"""Dense-matrix evaluation of Shor-Laflamme weights.

The only floating-point path in the package. Each weight is rounded to
the nearest rational with denominator p^n and rejected when the residual
exceeds the configured tolerance.
"""
import itertools
import logging
from fractions import Fraction
from functools import reduce
from typing import Sequence

import numpy as np

from qweight.enumerators.distribution import WeightDistribution, WeightKind
from qweight.oracle.pauli import PauliElement
from qweight.oracle.stabilizer import StabilizerCode
from qweight.shared.config import get_settings
from qweight.shared.errors import BudgetExceededError, DomainError

logger = logging.getLogger(__name__)


def _check_dimension(p: int, n: int) -> None:
    limit = get_settings().oracle.dense_max_dimension
    if p ** n > limit:
        raise BudgetExceededError(f"dense dimension {p}^{n}", p ** n, limit)


def single_site(a: int, b: int, p: int) -> np.ndarray:
    """X^a Z^b on one p-level system."""
    X = np.roll(np.eye(p), 1, axis=0)
    Z = np.diag(np.exp(2j * np.pi * np.arange(p) / p))
    return np.linalg.matrix_power(X, a) @ np.linalg.matrix_power(Z, b)


def pauli_matrix(e: PauliElement) -> np.ndarray:
    factors = [single_site(a, b, e.p) for a, b in zip(e.xvec, e.zvec)]
    return np.exp(1j * np.pi * e.phase / e.p) * reduce(np.kron, factors, np.eye(1))


def _round(value: float, p: int, n: int, tol: float) -> Fraction:
    scaled = value * p ** n
    nearest = round(scaled)
    if abs(scaled - nearest) / p ** n > tol:
        raise DomainError(f"weight {value!r} is not a multiple of 1/{p ** n} within {tol}")
    return Fraction(int(nearest), p ** n)


def dense_weights(state_vectors: Sequence[Sequence[complex]], p: int,
                  n: int) -> tuple[WeightDistribution, WeightDistribution]:
    """Sum |tr(E Pi)|^2 and tr(E^+ Pi E Pi) over all p^(2n) operators E, by weight."""
    _check_dimension(p, n)
    tol = get_settings().oracle.dense_tolerance
    psi = np.atleast_2d(np.asarray(state_vectors, dtype=complex)).T
    if psi.shape[0] != p ** n:
        raise DomainError(f"state vectors have dimension {psi.shape[0]}, expected {p ** n}")
    K = psi.shape[1]
    if not np.allclose(psi.conj().T @ psi, np.eye(K), atol=tol):
        raise DomainError("state vectors are not orthonormal")

    site_ops = {(a, b): single_site(a, b, p) for a in range(p) for b in range(p)}
    a_sums = np.zeros(n + 1)
    b_sums = np.zeros(n + 1)
    for labels in itertools.product(site_ops, repeat=n):
        E = reduce(np.kron, (site_ops[ab] for ab in labels), np.eye(1))
        M = psi.conj().T @ E @ psi
        wt = sum(1 for ab in labels if ab != (0, 0))
        a_sums[wt] += abs(np.trace(M)) ** 2
        b_sums[wt] += np.sum(np.abs(M) ** 2)
    logger.debug("dense census over %d operators", len(site_ops) ** n)
    A = WeightDistribution.build(p, WeightKind.SL_PRIMARY, K, [_round(v, p, n, tol) for v in a_sums])
    B = WeightDistribution.build(p, WeightKind.SL_DUAL, K, [_round(v, p, n, tol) for v in b_sums])
    return A, B


def _group_elements(code: StabilizerCode) -> list[PauliElement]:
    identity = PauliElement(code.n, code.p, (0,) * code.n, (0,) * code.n)
    elements = [identity]
    for g in code.stab_gens:
        powers = [identity]
        for _ in range(code.p - 1):
            powers.append(powers[-1] * g)
        elements = [e * g_c for e in elements for g_c in powers]
    return elements


def code_projector(code: StabilizerCode) -> np.ndarray:
    """Pi = p^-(n-k) sum_{M in S} M."""
    _check_dimension(code.p, code.n)
    total = sum(pauli_matrix(e) for e in _group_elements(code))
    return total / code.p ** (code.n - code.k)


def code_state_vectors(code: StabilizerCode) -> np.ndarray:
    """Orthonormal basis of the code space, one vector per row."""
    eigenvalues, eigenvectors = np.linalg.eigh(code_projector(code))
    return eigenvectors[:, eigenvalues > 0.5].T
