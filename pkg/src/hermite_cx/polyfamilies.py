"""Constructors for complex Hermite, real Hermite and generalized Laguerre
polynomials.

Three independent routes build ``H_{p,q}``: the closed-form double-factorial
sum, iterated raising operators applied to 1, and the first-order recurrences.
Negative indices give the zero polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .diffops import WeightTag, raise_pow, real_raise
from .exactnum import FieldElem, Scalar
from .multipoly import PARTNER, ZERO_POLY, Poly, const, monomial, substitute, var

_PAIRS = ("z", "w", "u", "v")


def _check_pair(pair: str) -> str:
    if pair not in _PAIRS:
        raise ValueError(f"pair must be one of {_PAIRS}, got {pair!r}")
    return pair


@lru_cache(maxsize=None)
def hermite_explicit(p: int, q: int, pair: str = "z") -> Poly:
    """``p! q! sum_k (-1)^k / k! * zbar^(q-k)/(q-k)! * z^(p-k)/(p-k)!``."""
    if p < 0 or q < 0:
        return ZERO_POLY
    holo, anti = _check_pair(pair), PARTNER[pair]
    pq = factorial(p) * factorial(q)
    terms = {}
    for k in range(min(p, q) + 1):
        num = (-1) ** k * pq
        den = factorial(k) * factorial(q - k) * factorial(p - k)
        terms[monomial(**{holo: p - k, anti: q - k})] = Fraction(num, den)
    return Poly(terms)


@lru_cache(maxsize=None)
def hermite_operator(p: int, q: int, pair: str = "z") -> Poly:
    """``(-d/dzbar + z)^p (-d/dz + zbar)^q (1)``."""
    if p < 0 or q < 0:
        return ZERO_POLY
    tag = WeightTag(_check_pair(pair))
    return raise_pow("z", p, raise_pow("zbar", q, const(1), tag), tag)


@lru_cache(maxsize=None)
def hermite_recurrence(p: int, q: int, pair: str = "z") -> Poly:
    """Built from ``H_{0,0} = 1`` by ``H_{p+1,q} = z H_{p,q} - q H_{p,q-1}``
    and ``H_{p,q+1} = zbar H_{p,q} - p H_{p-1,q}``."""
    if p < 0 or q < 0:
        return ZERO_POLY
    holo, anti = _check_pair(pair), PARTNER[pair]
    # column p = 0 via the second recurrence, then sweep p upward
    prev_row = [const(1)]
    for j in range(1, q + 1):
        prev_row.append(var(anti) * prev_row[-1])
    for i in range(p):
        row = []
        for j in range(q + 1):
            h = var(holo) * prev_row[j]
            if j:
                h = h - j * prev_row[j - 1]
            row.append(h)
        prev_row = row
    return prev_row[q]


@lru_cache(maxsize=None)
def real_hermite(m: int, name: str = "x") -> Poly:
    """Physicists' Hermite polynomial via ``(-D + 2x)^m (1)``."""
    if m < 0:
        raise ValueError("real Hermite index must be nonnegative")
    h = const(1)
    for _ in range(m):
        h = real_raise(h)
    if name != "x":
        h = substitute(h, {"x": var(name)})
    return h


@lru_cache(maxsize=None)
def laguerre(n: int, alpha: int, name: str = "t") -> Poly:
    """``L_n^(alpha)(t) = sum_k (-1)^k C(n+alpha, n-k) t^k / k!``."""
    if n < 0 or alpha < 0:
        raise ValueError("Laguerre parameters must be nonnegative")
    terms = {}
    for k in range(n + 1):
        terms[monomial(**{name: k})] = Fraction((-1) ** k * comb(n + alpha, n - k), factorial(k))
    return Poly(terms)


def hermite_scaled(p: int, q: int, s: Scalar, pair: str = "z") -> Poly:
    """``H_{p,q}(s z, s zbar)``."""
    s = FieldElem.coerce(s)
    holo, anti = _check_pair(pair), PARTNER[pair]
    h = hermite_explicit(p, q, pair)
    if s == 1:
        return h
    return substitute(h, {holo: s * var(holo), anti: s * var(anti)})


def hermite_at(p: int, q: int, first: Poly, second: Poly) -> Poly:
    """``H_{p,q}`` with ``z -> first`` and ``zbar -> second``."""
    return substitute(hermite_explicit(p, q), {"z": first, "zbar": second})
