# Area: Exact Math
# PRD: docs/prd-qweight.md
"""Binomial coefficients and Krawtchouk polynomials over exact integers."""
from functools import lru_cache
from math import comb

from qweight.shared.errors import DomainError


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def krawtchouk(m: int, ell: int, n: int) -> int:
    """K_m(ell, n) = sum_b (-1)^b C(n-ell, m-b) C(ell, b)."""
    if not (0 <= m <= n and 0 <= ell <= n):
        raise DomainError(f"krawtchouk indices out of range: m={m}, ell={ell}, n={n}")
    return sum(
        (-1) ** beta * binomial(n - ell, m - beta) * binomial(ell, beta)
        for beta in range(m + 1)
    )


@lru_cache(maxsize=None)
def krawtchouk_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """Rows m, columns ell."""
    if n < 0:
        raise DomainError(f"negative length {n}")
    return tuple(tuple(krawtchouk(m, ell, n) for ell in range(n + 1)) for m in range(n + 1))
