# Area: Enumerators
# PRD: docs/prd-qweight.md
"""Weight distributions and code parameters.

Every distribution carries its kind and its trace convention tr(Pi), so
distributions built under different conventions never compare equal by
accident.
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Union

from qweight.exactmath.forms import BivariateForm
from qweight.shared.errors import DomainError

RationalLike = Union[int, Fraction]


class WeightKind(Enum):
    """Which enumerator a distribution holds."""
    SL_PRIMARY = "sl-primary"
    SL_DUAL = "sl-dual"
    UNITARY_PRIMARY = "unitary-primary"
    UNITARY_DUAL = "unitary-dual"
    SHADOW = "shadow"

    @property
    def is_sl(self) -> bool:
        return self in (WeightKind.SL_PRIMARY, WeightKind.SL_DUAL)

    @property
    def is_unitary(self) -> bool:
        return self in (WeightKind.UNITARY_PRIMARY, WeightKind.UNITARY_DUAL)

    @property
    def is_primary(self) -> bool:
        return self in (WeightKind.SL_PRIMARY, WeightKind.UNITARY_PRIMARY)


@dataclass(frozen=True)
class WeightDistribution:
    """values[j] for j = 0..n under the declared kind and trace."""
    n: int
    D: int
    kind: WeightKind
    trace: Fraction
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"negative system count {self.n}")
        if self.D < 2:
            raise DomainError(f"local dimension must be >= 2, got {self.D}")
        if len(self.values) != self.n + 1:
            raise DomainError(f"expected {self.n + 1} values, got {len(self.values)}")
        if self.kind.is_primary and self.values[0] != self.trace ** 2:
            raise DomainError(
                f"{self.kind.value}: values[0]={self.values[0]} but trace^2={self.trace ** 2}"
            )

    @classmethod
    def build(cls, D: int, kind: WeightKind, trace: RationalLike,
              values: Iterable[RationalLike]) -> "WeightDistribution":
        vals = tuple(Fraction(v) for v in values)
        return cls(len(vals) - 1, D, kind, Fraction(trace), vals)

    def with_values(self, kind: WeightKind, values: Iterable[RationalLike]) -> "WeightDistribution":
        return WeightDistribution.build(self.D, kind, self.trace, values)

    def to_form(self) -> BivariateForm:
        return BivariateForm(self.n, self.values)

    def __getitem__(self, j: int) -> Fraction:
        return self.values[j]

    def __len__(self) -> int:
        return len(self.values)

    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))


def log_exact(K: int, D: int, max_denominator: int = 64) -> Optional[Fraction]:
    """Exact log_D K when K is a rational power of D, else None."""
    if K < 1 or D < 2:
        raise DomainError(f"log_{D}({K}) undefined")
    if K == 1:
        return Fraction(0)
    ratio = math.log(K) / math.log(D)
    for b in range(1, max_denominator + 1):
        a = round(ratio * b)
        if a > 0 and D ** a == K ** b:
            return Fraction(a, b)
    return None


@dataclass(frozen=True)
class CodeParams:
    """((n, K, d))_D with K = D^k.

    k is None only when K was given explicitly and is not a rational
    power of D; then `dimension` carries K.
    """
    n: int
    k: Optional[Fraction]
    d: int
    D: int
    dimension: Optional[int] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.D < 2:
            raise DomainError(f"local dimension must be >= 2, got {self.D}")
        if self.n < 1:
            raise DomainError(f"length must be >= 1, got {self.n}")
        if not 1 <= self.d <= self.n:
            raise DomainError(f"distance {self.d} outside 1..{self.n}")
        if self.k is None:
            if self.dimension is None:
                raise DomainError("either k or an explicit dimension is required")
        else:
            object.__setattr__(self, "k", Fraction(self.k))
            if not 0 <= self.k <= self.n:
                raise DomainError(f"k={self.k} outside 0..{self.n}")
        if self.dimension is not None and self.dimension < 1:
            raise DomainError(f"dimension must be positive, got {self.dimension}")

    @classmethod
    def qmds(cls, n: int, k: int, D: int) -> "CodeParams":
        """The QMDS member of length n and log-dimension k."""
        if (n - k) % 2:
            raise DomainError(f"n-k must be even for QMDS parameters, got n={n}, k={k}")
        return cls(n, Fraction(k), (n - k + 2) // 2, D)

    @classmethod
    def family_member(cls, alpha: int, d: int, D: int) -> "CodeParams":
        """Member (alpha+d-1, alpha-d+1, d) of the family n+k = 2*alpha."""
        return cls(alpha + d - 1, Fraction(alpha - d + 1), d, D)

    @classmethod
    def ame(cls, n: int, D: int) -> "CodeParams":
        return cls(n, Fraction(0), n // 2 + 1, D)

    @classmethod
    def from_dimension(cls, n: int, K: int, d: int, D: int) -> "CodeParams":
        k = log_exact(K, D)
        return cls(n, k, d, D, dimension=K)

    @property
    def K(self) -> Union[int, Fraction]:
        if self.dimension is not None:
            return self.dimension
        if self.k.denominator == 1:
            return self.D ** int(self.k)
        root = round(self.D ** (self.k.numerator / self.k.denominator))
        if root ** self.k.denominator == self.D ** self.k.numerator:
            return root
        raise DomainError(f"K = {self.D}^{self.k} is not an integer")

    @property
    def alpha(self) -> Fraction:
        if self.k is None:
            raise DomainError(f"alpha undefined: log_{self.D} {self.dimension} is irrational")
        return (self.n + self.k) / 2

    @property
    def n_plus_k(self) -> int:
        total = 2 * self.alpha
        if total.denominator != 1:
            raise DomainError(f"n+k={total} is not an integer")
        return int(total)

    @property
    def is_qmds(self) -> bool:
        return (self.k is not None and self.k.denominator == 1
                and self.k == self.n - 2 * self.d + 2)

    @property
    def is_ame(self) -> bool:
        return self.k == 0 and self.d == self.n // 2 + 1

    @property
    def label(self) -> str:
        if self.k is None:
            return f"(({self.n},{self.dimension},{self.d}))"
        k = self.k if self.k.denominator != 1 else int(self.k)
        return f"[[{self.n},{k},{self.d}]]"

    def __str__(self) -> str:
        return f"{self.label}_{self.D}"
