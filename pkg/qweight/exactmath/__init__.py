"""Exact binomials, Krawtchouk polynomials and bivariate forms."""
from qweight.exactmath.binomials import binomial, krawtchouk, krawtchouk_matrix
from qweight.exactmath.forms import BivariateForm, substitute, to_fraction

__all__ = [
    "binomial",
    "krawtchouk",
    "krawtchouk_matrix",
    "BivariateForm",
    "substitute",
    "to_fraction",
]
