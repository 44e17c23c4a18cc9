"""Truncated multivariate formal power series.

A :class:`TruncSeries` is a polynomial body together with a total-degree cap.
The degree is measured over a declared set of *graded* variables (all of them
by default); the remaining variables act as coefficients.  Grading only the
expansion variables lets ``exp(u z + v zbar - u v)`` be expanded to order D in
(u, v) while keeping z and zbar untruncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .multipoly import VARS, ZERO_POLY, Poly, const, var_index


class OutOfCapError(ValueError):
    """Requested coefficient lies beyond the truncation order."""


class ConstantTermError(ValueError):
    """The exponential argument has a term of graded degree zero."""


def _graded(names: Iterable[str] | None) -> tuple:
    if names is None:
        return VARS
    names = tuple(sorted(set(names), key=var_index))
    for n in names:
        var_index(n)
    return names


@dataclass(frozen=True)
class TruncSeries:
    body: Poly
    cap: int
    graded: tuple = VARS

    def __post_init__(self):
        if self.cap < 0:
            raise ValueError("truncation cap must be nonnegative")
        object.__setattr__(self, "graded", _graded(self.graded))
        object.__setattr__(self, "body", self.body.truncate(self.cap, self.graded))

    def _join(self, other: TruncSeries | Poly) -> tuple:
        if isinstance(other, Poly):
            return other, self.cap
        if other.graded != self.graded:
            raise ValueError("series graded over different variable sets")
        return other.body, min(self.cap, other.cap)

    def __add__(self, other):
        body, cap = self._join(other)
        return TruncSeries(self.body + body, cap, self.graded)

    def __sub__(self, other):
        body, cap = self._join(other)
        return TruncSeries(self.body - body, cap, self.graded)

    def __neg__(self):
        return TruncSeries(-self.body, self.cap, self.graded)

    def __mul__(self, other):
        if not isinstance(other, (TruncSeries, Poly)):
            return TruncSeries(self.body * other, self.cap, self.graded)
        body, cap = self._join(other)
        a = self.body.truncate(cap, self.graded)
        b = body.truncate(cap, self.graded)
        return TruncSeries(a * b, cap, self.graded)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def __str__(self):
        return f"{self.body} + O(deg {self.cap + 1})"


def series(f: Poly, cap: int, graded: Iterable[str] | None = None) -> TruncSeries:
    return TruncSeries(f, cap, _graded(graded))


def series_add(s1: TruncSeries, s2: TruncSeries) -> TruncSeries:
    return s1 + s2


def series_mul(s1: TruncSeries, s2: TruncSeries) -> TruncSeries:
    return s1 * s2


def series_exp(f: Poly, cap: int, graded: Iterable[str] | None = None) -> TruncSeries:
    """``sum_{n<=cap} f^n / n!`` truncated at graded degree ``cap``."""
    g = _graded(graded)
    if not f.is_zero() and f.min_degree(g) == 0:
        raise ConstantTermError(
            "exponential argument must have no term of graded degree 0 "
            "(its exponential is not a finite-rational truncated series)"
        )
    f = f.truncate(cap, g)
    total = const(1)
    term = const(1)
    for n in range(1, cap + 1):
        term = (term * f).truncate(cap, g) * Fraction(1, n)
        if term.is_zero():
            break
        total = total + term
    return TruncSeries(total, cap, g)


def coeff_extract(s: TruncSeries | Poly, exponents: Mapping[str, int]) -> Poly:
    """Coefficient of the monomial ``exponents`` as a polynomial in the
    remaining variables."""
    idx = {var_index(n): e for n, e in exponents.items()}
    if isinstance(s, TruncSeries):
        graded_idx = {var_index(n) for n in s.graded}
        requested = sum(e for k, e in idx.items() if k in graded_idx)
        if requested > s.cap:
            raise OutOfCapError(
                f"requested graded degree {requested} exceeds cap {s.cap}"
            )
        body = s.body
    else:
        body = s
    out = {}
    for exp, c in body.terms.items():
        if all(exp[k] == e for k, e in idx.items()):
            rest = list(exp)
            for k in idx:
                rest[k] = 0
            out[tuple(rest)] = c
    return Poly(out) if out else ZERO_POLY
