# Area: Exact Math
# PRD: docs/prd-qweight.md
"""Homogeneous bivariate forms sum_j c_j x^(n-j) y^j.

Linear substitutions are expanded with sympy and the coefficients read
back as Fractions.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from sympy import Poly, Rational, expand, symbols

from qweight.shared.errors import DomainError

x, y = symbols("x y")

RationalLike = Union[int, Fraction]


def to_fraction(value) -> Fraction:
    """Convert ints, Fractions and sympy rationals to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if getattr(value, "is_Rational", False):
        return Fraction(int(value.p), int(value.q))
    raise DomainError(f"not an exact rational: {value!r}")


def _sym(value: RationalLike) -> Rational:
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


@dataclass(frozen=True)
class BivariateForm:
    """coeffs[j] is the coefficient of x^(degree-j) y^j."""
    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise DomainError(f"negative degree {self.degree}")
        if len(self.coeffs) != self.degree + 1:
            raise DomainError(
                f"degree {self.degree} form needs {self.degree + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[RationalLike]) -> "BivariateForm":
        values = tuple(Fraction(c) for c in coeffs)
        return cls(len(values) - 1, values)

    def to_sympy(self):
        n = self.degree
        return sum(_sym(c) * x ** (n - j) * y ** j for j, c in enumerate(self.coeffs))

    def evaluate(self, xv: RationalLike, yv: RationalLike) -> Fraction:
        xv, yv = Fraction(xv), Fraction(yv)
        n = self.degree
        return sum((c * xv ** (n - j) * yv ** j for j, c in enumerate(self.coeffs)), Fraction(0))

    @classmethod
    def from_sympy(cls, expr, degree: int) -> "BivariateForm":
        poly = Poly(expand(expr), x, y)
        coeffs = [Fraction(0)] * (degree + 1)
        for (px, py), c in poly.terms():
            if c == 0:
                continue
            if px + py != degree:
                raise DomainError(f"term x^{px} y^{py} is not of degree {degree}")
            coeffs[py] = to_fraction(c)
        return cls(degree, tuple(coeffs))


def substitute(form: BivariateForm, a: RationalLike, b: RationalLike,
               c: RationalLike, e: RationalLike) -> BivariateForm:
    """form(a*x + b*y, c*x + e*y), expanded."""
    if form.degree == 0:
        return form
    expr = form.to_sympy().subs(
        {x: _sym(a) * x + _sym(b) * y, y: _sym(c) * x + _sym(e) * y},
        simultaneous=True,
    )
    return BivariateForm.from_sympy(expr, form.degree)
