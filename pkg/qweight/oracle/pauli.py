# Area: Stabilizer Oracle
# PRD: docs/prd-qweight.md
"""Generalized Pauli operators over Z_p and GF(p) linear algebra.

An element is w'^phase X^x Z^z with w' = exp(i pi / p) and ZX = w XZ,
w = w'^2. Vectors are laid out as (x_1..x_n, z_1..z_n).
"""
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from qweight.shared.errors import DomainError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % f for f in range(2, int(p ** 0.5) + 1))


def canonical_phase(xvec: Sequence[int], zvec: Sequence[int], p: int) -> int:
    """Phase that makes X^x Z^z (with that phase) square to the identity."""
    return ((p - 1) * sum(a * b for a, b in zip(xvec, zvec))) % 2


@dataclass(frozen=True)
class PauliElement:
    n: int
    p: int
    xvec: tuple[int, ...]
    zvec: tuple[int, ...]
    phase: int = 0

    def __post_init__(self) -> None:
        if len(self.xvec) != self.n or len(self.zvec) != self.n:
            raise DomainError(f"Pauli vectors must have length {self.n}")
        object.__setattr__(self, "xvec", tuple(int(a) % self.p for a in self.xvec))
        object.__setattr__(self, "zvec", tuple(int(b) % self.p for b in self.zvec))
        object.__setattr__(self, "phase", int(self.phase) % (2 * self.p))

    @classmethod
    def from_vector(cls, vec: Sequence[int], p: int, phase: int = None) -> "PauliElement":
        n = len(vec) // 2
        xvec, zvec = tuple(vec[:n]), tuple(vec[n:])
        if phase is None:
            phase = canonical_phase([a % p for a in xvec], [b % p for b in zvec], p)
        return cls(n, p, xvec, zvec, phase)

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.xvec + self.zvec, dtype=np.int64)

    @property
    def support(self) -> int:
        """Bitmask, bit i set when site i is acted on."""
        return sum(1 << i for i in range(self.n) if self.xvec[i] or self.zvec[i])

    @property
    def weight(self) -> int:
        return sum(1 for a, b in zip(self.xvec, self.zvec) if a or b)

    def symplectic(self, other: "PauliElement") -> int:
        """<self, other> = x.z' - z.x' mod p; zero iff they commute."""
        return (sum(a * b for a, b in zip(self.xvec, other.zvec))
                - sum(b * a for b, a in zip(self.zvec, other.xvec))) % self.p

    def commutes_with(self, other: "PauliElement") -> bool:
        return self.symplectic(other) == 0

    def __mul__(self, other: "PauliElement") -> "PauliElement":
        # Z^b X^a' = w^(b.a') X^a' Z^b
        cross = sum(b * a for b, a in zip(self.zvec, other.xvec))
        return PauliElement(
            self.n, self.p,
            tuple(a + a2 for a, a2 in zip(self.xvec, other.xvec)),
            tuple(b + b2 for b, b2 in zip(self.zvec, other.zvec)),
            self.phase + other.phase + 2 * cross,
        )

    def squares_to_identity(self) -> bool:
        """E^p = +I."""
        ab = sum(a * b for a, b in zip(self.xvec, self.zvec))
        return (self.phase + ab * (self.p - 1)) % 2 == 0

    def is_identity(self) -> bool:
        return not any(self.xvec) and not any(self.zvec)

    def restrict(self, sites: Sequence[int]) -> "PauliElement":
        """Keep only the given sites (phase kept)."""
        return PauliElement(
            len(sites), self.p,
            tuple(self.xvec[i] for i in sites),
            tuple(self.zvec[i] for i in sites),
            self.phase,
        )

    def extend(self, xtail: Sequence[int], ztail: Sequence[int]) -> "PauliElement":
        """Tensor with extra sites, phase re-canonicalised."""
        xvec, zvec = self.xvec + tuple(xtail), self.zvec + tuple(ztail)
        return PauliElement(len(xvec), self.p, xvec, zvec, canonical_phase(xvec, zvec, self.p))

    def __str__(self) -> str:
        symbols = []
        for a, b in zip(self.xvec, self.zvec):
            if not a and not b:
                symbols.append("I")
                continue
            sym = ""
            if a:
                sym += "X" if a == 1 else f"X^{a}"
            if b:
                sym += "Z" if b == 1 else f"Z^{b}"
            symbols.append(sym)
        return f"{self.phase} " + " ".join(symbols)


def symplectic_form(n: int) -> np.ndarray:
    """Lambda with u Lambda v^T = <u, v>."""
    eye = np.eye(n, dtype=np.int64)
    zero = np.zeros((n, n), dtype=np.int64)
    return np.block([[zero, eye], [-eye, zero]])


def gram_mod_p(rows_a: np.ndarray, rows_b: np.ndarray, p: int) -> np.ndarray:
    """Matrix of symplectic products <a_i, b_j> mod p."""
    n = rows_a.shape[1] // 2
    return (rows_a @ symplectic_form(n) @ rows_b.T) % p


def row_reduce(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p) and the pivot columns."""
    m = np.array(mat, dtype=np.int64) % p
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        pivot = r + nz[0]
        m[[r, pivot]] = m[[pivot, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        others = np.nonzero(m[:, c])[0]
        for i in others:
            if i != r:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    if np.size(mat) == 0:
        return 0
    return len(row_reduce(mat, p)[1])


def nullspace_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of {v : mat v = 0} over GF(p)."""
    mat = np.atleast_2d(np.array(mat, dtype=np.int64))
    cols = mat.shape[1]
    if mat.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    rref, pivots = row_reduce(mat, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for r, c in enumerate(pivots):
            basis[t, c] = (-rref[r, f]) % p
    return basis


def commutant_basis(rows: np.ndarray, n: int, p: int) -> np.ndarray:
    """Basis of all Pauli vectors commuting with every row."""
    if len(rows) == 0:
        return np.eye(2 * n, dtype=np.int64)
    constraints = (np.asarray(rows, dtype=np.int64) @ symplectic_form(n)) % p
    return nullspace_mod_p(constraints, p)


def stack(elements: Iterable[PauliElement], n: int) -> np.ndarray:
    vecs = [e.vector for e in elements]
    if not vecs:
        return np.zeros((0, 2 * n), dtype=np.int64)
    return np.vstack(vecs)
