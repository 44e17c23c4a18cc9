"""Sparse multivariate polynomials over Q(i, sqrt2).

Variables come from a fixed alphabet.  ``z`` and ``zbar`` (likewise ``w``/``wbar``,
``u``/``ubar``, ``v``/``vbar``) are independent formal variables; conjugation is
the ring involution swapping each pair and conjugating coefficients.

Monomials are stored as dense exponent tuples indexed by :data:`VARS`; the
polynomial itself is a dict ``{exponents: FieldElem}`` with no zero entries.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from typing import Iterable, Mapping

from .exactnum import FieldElem, Scalar, render_latex, render_text

VARS = ("z", "zbar", "w", "wbar", "u", "ubar", "v", "vbar", "x", "y", "t")
NVARS = len(VARS)
VAR_INDEX = {name: k for k, name in enumerate(VARS)}
PARTNER = {
    "z": "zbar", "zbar": "z",
    "w": "wbar", "wbar": "w",
    "u": "ubar", "ubar": "u",
    "v": "vbar", "vbar": "v",
    "x": "x", "y": "y", "t": "t",
}
_PARTNER_IDX = tuple(VAR_INDEX[PARTNER[name]] for name in VARS)
_ONE_EXP = (0,) * NVARS

_LATEX_NAMES = {
    "z": "z", "zbar": "\\bar{z}",
    "w": "w", "wbar": "\\bar{w}",
    "u": "u", "ubar": "\\bar{u}",
    "v": "v", "vbar": "\\bar{v}",
    "x": "x", "y": "y", "t": "t",
}


class VariableError(ValueError):
    """Unknown variable name, or a variable used where it is not allowed."""


class UnassignedVariableError(VariableError):
    pass


def var_index(name: str) -> int:
    try:
        return VAR_INDEX[name]
    except KeyError:
        raise VariableError(f"unknown variable {name!r}; expected one of {VARS}") from None


def monomial(**exps: int) -> tuple:
    e = [0] * NVARS
    for name, k in exps.items():
        if k < 0:
            raise ValueError("negative exponent")
        e[var_index(name)] = k
    return tuple(e)


class Poly:
    """Immutable sparse polynomial.  Build with :func:`var`, :func:`const` and
    the arithmetic operators."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != NVARS:
                    raise ValueError("exponent tuple has wrong length")
                c = FieldElem.coerce(c)
                if c:
                    clean[tuple(exp)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> Poly:
        # terms already canonical (no zeros); caller gives up ownership
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[tuple, FieldElem]:
        return self._terms

    def items_sorted(self) -> list:
        """Terms in canonical order: descending lexicographic exponents."""
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def variables(self) -> set:
        used = set()
        for exp in self._terms:
            for k, e in enumerate(exp):
                if e:
                    used.add(VARS[k])
        return used

    def total_degree(self, among: Iterable[str] | None = None) -> int:
        if not self._terms:
            return -1
        idx = _indices(among)
        return max(sum(exp[k] for k in idx) for exp in self._terms)

    def min_degree(self, among: Iterable[str] | None = None) -> int:
        if not self._terms:
            return -1
        idx = _indices(among)
        return min(sum(exp[k] for k in idx) for exp in self._terms)

    def constant_term(self) -> FieldElem:
        return self._terms.get(_ONE_EXP, FieldElem())

    def coefficient(self, **exps: int) -> FieldElem:
        return self._terms.get(monomial(**exps), FieldElem())

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for exp, c in other._terms.items():
            prev = out.get(exp)
            if prev is None:
                out[exp] = c
            else:
                s = prev + c
                if s:
                    out[exp] = s
                else:
                    del out[exp]
        return Poly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._wrap({exp: -c for exp, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElem)) or _is_fraction(other):
            return scale(other, self)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO_POLY
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        add = operator.add
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                exp = tuple(map(add, e1, e2))
                prod = c1 * c2
                prev = out.get(exp)
                out[exp] = prod if prev is None else prev + prod
        return Poly._wrap({e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElem)) or _is_fraction(other):
            return scale(other, self)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, FieldElem)) or _is_fraction(other):
            return scale(FieldElem.coerce(other).inverse(), self)
        return NotImplemented

    def __pow__(self, n: int):
        return power(self, n)

    # -- equality ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- calculus and maps ------------------------------------------------

    def partial(self, name: str) -> Poly:
        return partial(name, self)

    def substitute(self, bindings: Mapping[str, Poly | Scalar]) -> Poly:
        return substitute(self, bindings)

    def conjugate(self) -> Poly:
        return conjugate(self)

    def eval_complex(self, assignment: Mapping[str, complex]) -> complex:
        return eval_complex(self, assignment)

    def truncate(self, cap: int, among: Iterable[str] | None = None) -> Poly:
        idx = _indices(among)
        return Poly._wrap(
            {e: c for e, c in self._terms.items() if sum(e[k] for k in idx) <= cap}
        )

    # -- rendering --------------------------------------------------------

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Poly({render(self)})"

    def to_json(self) -> list:
        return to_json(self)


ZERO_POLY = Poly._wrap({})


def _is_fraction(x) -> bool:
    return isinstance(x, Fraction)


def _as_poly(x) -> Poly | None:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, FieldElem)) or _is_fraction(x):
        return const(x)
    return None


def _indices(among: Iterable[str] | None) -> tuple:
    if among is None:
        return tuple(range(NVARS))
    return tuple(sorted(var_index(n) for n in among))


def const(c: Scalar) -> Poly:
    c = FieldElem.coerce(c)
    if not c:
        return ZERO_POLY
    return Poly._wrap({_ONE_EXP: c})


def var(name: str) -> Poly:
    e = [0] * NVARS
    e[var_index(name)] = 1
    return Poly._wrap({tuple(e): FieldElem(1)})


def mono(coeff: Scalar = 1, **exps: int) -> Poly:
    c = FieldElem.coerce(coeff)
    if not c:
        return ZERO_POLY
    return Poly._wrap({monomial(**exps): c})


ONE_POLY = const(1)


# -- ring operations as functions ---------------------------------------------


def add(f: Poly, g: Poly) -> Poly:
    return f + g


def mul(f: Poly, g: Poly) -> Poly:
    return f * g


def scale(c: Scalar, f: Poly) -> Poly:
    c = FieldElem.coerce(c)
    if not c or not f._terms:
        return ZERO_POLY
    if c == 1:
        return f
    out = {}
    for exp, a in f._terms.items():
        prod = a * c
        if prod:
            out[exp] = prod
    return Poly._wrap(out)


def power(f: Poly, n: int) -> Poly:
    if n < 0:
        raise ValueError("negative power of a polynomial")
    result = ONE_POLY
    base = f
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def partial(name: str, f: Poly) -> Poly:
    """Formal partial derivative with respect to ``name``."""
    k = var_index(name)
    out = {}
    for exp, c in f._terms.items():
        e = exp[k]
        if e:
            new = exp[:k] + (e - 1,) + exp[k + 1:]
            out[new] = c * e
    return Poly._wrap(out)


def substitute(f: Poly, bindings: Mapping[str, Poly | Scalar]) -> Poly:
    """Simultaneous substitution of polynomials for variables."""
    if not bindings:
        return f
    subs = {}
    for name, g in bindings.items():
        p = _as_poly(g)
        if p is None:
            raise TypeError(f"cannot substitute {g!r}")
        subs[var_index(name)] = p
    keep = [k for k in range(NVARS) if k not in subs]
    # cache powers of each substituted polynomial
    cache: dict = {}

    def pw(k: int, e: int) -> Poly:
        key = (k, e)
        if key not in cache:
            cache[key] = power(subs[k], e)
        return cache[key]

    result: dict = {}
    for exp, c in f._terms.items():
        rest = [0] * NVARS
        for k in keep:
            rest[k] = exp[k]
        term = Poly._wrap({tuple(rest): c})
        for k in subs:
            if exp[k]:
                term = term * pw(k, exp[k])
        for e2, c2 in term._terms.items():
            prev = result.get(e2)
            result[e2] = c2 if prev is None else prev + c2
    return Poly._wrap({e: c for e, c in result.items() if c})


def conjugate(f: Poly) -> Poly:
    out = {}
    for exp, c in f._terms.items():
        out[tuple(exp[j] for j in _PARTNER_IDX)] = c.conj()
    return Poly._wrap(out)


def eval_complex(f: Poly, assignment: Mapping[str, complex]) -> complex:
    """Floating evaluation, terms accumulated in canonical monomial order."""
    vals = [None] * NVARS
    for name, value in assignment.items():
        vals[var_index(name)] = complex(value)
    total = 0j
    for exp, c in f.items_sorted():
        term = complex(c)
        for k, e in enumerate(exp):
            if e:
                v = vals[k]
                if v is None:
                    raise UnassignedVariableError(f"variable {VARS[k]!r} is not assigned")
                term *= v ** e
        total += term
    return total


# -- rendering ----------------------------------------------------------------


def _mono_text(exp: tuple) -> str:
    parts = []
    for k, e in enumerate(exp):
        if e == 1:
            parts.append(VARS[k])
        elif e > 1:
            parts.append(f"{VARS[k]}^{e}")
    return "*".join(parts)


def _mono_latex(exp: tuple) -> str:
    parts = []
    for k, e in enumerate(exp):
        if e == 1:
            parts.append(_LATEX_NAMES[VARS[k]])
        elif e > 1:
            parts.append(f"{_LATEX_NAMES[VARS[k]]}^{{{e}}}")
    return "".join(parts)


def _split_sign(c: FieldElem) -> tuple:
    # leading nonzero coordinate decides the displayed sign
    for q in c.coords():
        if q:
            return (q < 0, -c if q < 0 else c)
    return (False, c)


def render(f: Poly) -> str:
    """Canonical text, e.g. ``z^2*zbar - 2z``."""
    if not f._terms:
        return "0"
    out = []
    for idx, (exp, c) in enumerate(f.items_sorted()):
        neg, mag = _split_sign(c)
        m = _mono_text(exp)
        if not m:
            body = render_text(mag)
        elif mag == 1:
            body = m
        elif mag.is_rational():
            q = mag.a
            body = f"{q}{m}" if isinstance(q, int) else f"{q}*{m}"
        else:
            body = f"({render_text(mag)})*{m}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def render_latex_poly(f: Poly) -> str:
    if not f._terms:
        return "0"
    out = []
    for idx, (exp, c) in enumerate(f.items_sorted()):
        neg, mag = _split_sign(c)
        m = _mono_latex(exp)
        if not m:
            body = render_latex(mag)
        elif mag == 1:
            body = m
        elif mag.is_rational():
            body = render_latex(mag) + m
        else:
            body = f"\\left({render_latex(mag)}\\right){m}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def to_json(f: Poly) -> list:
    return [
        {
            "exponents": {VARS[k]: e for k, e in enumerate(exp) if e},
            "coefficient": render_text(c),
        }
        for exp, c in f.items_sorted()
    ]
