"""Exact arithmetic in the quartic field Q(i, sqrt2).

Rationals are :class:`fractions.Fraction`; components that happen to be
integral are stored as plain ``int`` so the common integer-only workloads stay
fast.  ``int`` and ``Fraction`` compare and hash consistently, so equality of
:class:`FieldElem` values remains structural.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction
Scalar = Union[int, Fraction, "FieldElem"]

SQRT2_FLOAT = 2.0 ** 0.5


def _canon(x) -> int | Fraction:
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, _RationalABC):
        return _canon(Fraction(x.numerator, x.denominator))
    raise TypeError(f"not an exact rational: {x!r}")


def _fmt_rational(q) -> str:
    return str(q)


class FieldElem:
    """``a + b*i + c*sqrt2 + d*i*sqrt2`` with rational a, b, c, d."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = _canon(a)
        self.b = _canon(b)
        self.c = _canon(c)
        self.d = _canon(d)

    @classmethod
    def _raw(cls, a, b, c, d) -> FieldElem:
        obj = object.__new__(cls)
        obj.a, obj.b, obj.c, obj.d = a, b, c, d
        return obj

    @classmethod
    def coerce(cls, x: Scalar) -> FieldElem:
        if isinstance(x, FieldElem):
            return x
        return cls(x)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def coords(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    # -- ring structure ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, FieldElem):
            return FieldElem._raw(
                _canon(self.a + other.a),
                _canon(self.b + other.b),
                _canon(self.c + other.c),
                _canon(self.d + other.d),
            )
        if isinstance(other, (int, Fraction)):
            return FieldElem._raw(_canon(self.a + other), self.b, self.c, self.d)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return FieldElem._raw(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        if isinstance(other, (FieldElem, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if self.b or self.c or self.d:
                return FieldElem._raw(
                    _canon(self.a * other),
                    _canon(self.b * other),
                    _canon(self.c * other),
                    _canon(self.d * other),
                )
            return FieldElem._raw(_canon(self.a * other), 0, 0, 0)
        if not isinstance(other, FieldElem):
            return NotImplemented
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        if not (b or c or d):
            return other * a if a != 1 else other
        if not (f or g or h):
            return self * e if e != 1 else self
        # i^2 = -1, sqrt2^2 = 2, i*sqrt2 products folded in
        return FieldElem._raw(
            _canon(a * e - b * f + 2 * (c * g - d * h)),
            _canon(a * f + b * e + 2 * (c * h + d * g)),
            _canon(a * g + c * e - (b * h + d * f)),
            _canon(a * h + d * e + b * g + c * f),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(i, sqrt2)")
            inv = Fraction(1) / other
            return self * inv
        if isinstance(other, FieldElem):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return FieldElem.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- Galois action ----------------------------------------------------

    def conj(self) -> FieldElem:
        """Complex conjugation: i -> -i, sqrt2 fixed."""
        return FieldElem._raw(self.a, -self.b, self.c, -self.d)

    def sqrt2_flip(self) -> FieldElem:
        return FieldElem._raw(self.a, self.b, -self.c, -self.d)

    def norm(self) -> Fraction:
        """Product of the four Galois conjugates; lies in Q."""
        s = self.conj()
        t = self.sqrt2_flip()
        u = s.sqrt2_flip()
        n = self * s * t * u
        assert n.is_rational()
        return Fraction(n.a)

    def inverse(self) -> FieldElem:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(i, sqrt2)")
        s = self.conj()
        t = self.sqrt2_flip()
        u = s.sqrt2_flip()
        cofactor = s * t * u
        n = (self * cofactor).a
        return cofactor * (Fraction(1) / n)

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return (
                self.a == other.a
                and self.b == other.b
                and self.c == other.c
                and self.d == other.d
            )
        if isinstance(other, (int, Fraction)):
            return self.a == other and not (self.b or self.c or self.d)
        return NotImplemented

    def __hash__(self):
        if not (self.b or self.c or self.d):
            return hash(self.a)
        return hash((self.a, self.b, self.c, self.d))

    # -- conversions ------------------------------------------------------

    def __complex__(self) -> complex:
        return complex(
            float(self.a) + float(self.c) * SQRT2_FLOAT,
            float(self.b) + float(self.d) * SQRT2_FLOAT,
        )

    def to_complex(self) -> complex:
        return complex(self)

    def __repr__(self):
        return f"FieldElem({self})"

    def __str__(self):
        return render_text(self)


ZERO = FieldElem()
ONE = FieldElem(1)
I = FieldElem(0, 1)
SQRT2 = FieldElem(0, 0, 1)
I_SQRT2 = FieldElem(0, 0, 0, 1)

_BASIS_TEXT = ("", "i", "sqrt2", "i*sqrt2")
_BASIS_LATEX = ("", "i", "\\sqrt{2}", "i\\sqrt{2}")


def field_mul(x: Scalar, y: Scalar) -> FieldElem:
    return FieldElem.coerce(x) * FieldElem.coerce(y)


def field_conj(x: Scalar) -> FieldElem:
    return FieldElem.coerce(x).conj()


def field_inv(x: Scalar) -> FieldElem:
    return FieldElem.coerce(x).inverse()


def sqrt2_power(n: int) -> FieldElem:
    """``sqrt2 ** n`` for any integer n, exactly."""
    half, odd = divmod(abs(n), 2)
    base = FieldElem(0, 0, 1) if odd else FieldElem(1)
    val = base * (2 ** half)
    return val if n >= 0 else val.inverse()


def i_power(n: int) -> FieldElem:
    return (ONE, I, -ONE, -I)[n % 4]


def _terms(x: FieldElem):
    return [(q, k) for k, q in enumerate(x.coords()) if q]


def render_text(x: Scalar) -> str:
    """Canonical ``a + b*i + c*sqrt2 + d*i*sqrt2`` with zero terms omitted."""
    x = FieldElem.coerce(x)
    parts = _terms(x)
    if not parts:
        return "0"
    out = []
    for idx, (q, k) in enumerate(parts):
        neg = q < 0
        mag = -q if neg else q
        if k == 0:
            body = _fmt_rational(mag)
        elif mag == 1:
            body = _BASIS_TEXT[k]
        else:
            body = f"{_fmt_rational(mag)}*{_BASIS_TEXT[k]}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def _latex_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"\\frac{{{q.numerator}}}{{{q.denominator}}}"


def render_latex(x: Scalar) -> str:
    x = FieldElem.coerce(x)
    parts = _terms(x)
    if not parts:
        return "0"
    out = []
    for idx, (q, k) in enumerate(parts):
        neg = q < 0
        mag = -q if neg else q
        if k == 0:
            body = _latex_rational(mag)
        elif mag == 1:
            body = _BASIS_LATEX[k]
        else:
            body = _latex_rational(mag) + _BASIS_LATEX[k]
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
