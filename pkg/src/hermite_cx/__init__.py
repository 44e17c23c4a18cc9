"""Exact computer algebra for the complex Hermite polynomials H_{p,q}(z, zbar)."""

from .exactnum import FieldElem, Rational
from .multipoly import Poly, conjugate, eval_complex, mono, partial, render, substitute, var
from .polyfamilies import (
    hermite_explicit,
    hermite_operator,
    hermite_recurrence,
    hermite_scaled,
    laguerre,
    real_hermite,
)

__version__ = "0.1.0"

__all__ = [
    "FieldElem",
    "Poly",
    "Rational",
    "__version__",
    "conjugate",
    "eval_complex",
    "hermite_explicit",
    "hermite_operator",
    "hermite_recurrence",
    "hermite_scaled",
    "laguerre",
    "mono",
    "partial",
    "real_hermite",
    "render",
    "substitute",
    "var",
]
