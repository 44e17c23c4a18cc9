"""Gaussian integration on monomials and certified numeric summation.

The Gaussian functional is exact (values in units of pi).  Infinite sums at
complex points are truncated where a rigorous majorant of the remainder drops
below the requested tolerance; the remainder bound is returned alongside the
value so callers can audit it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import comb, factorial, lgamma, log

from .exactnum import FieldElem
from .multipoly import VAR_INDEX, Poly, VariableError, conjugate, eval_complex
from .polyfamilies import hermite_explicit

MAX_KERNEL_TERMS = 10_000
QUAD_RADIUS = 0.75
MAX_QUAD_ORDER = 160
BOUND_SLACK = 1e-12

_Z, _ZBAR = VAR_INDEX["z"], VAR_INDEX["zbar"]


class ConvergenceError(RuntimeError):
    pass


class DomainError(ValueError):
    pass


# -- exact Gaussian functional ------------------------------------------------


def gaussian_functional(f: Poly) -> FieldElem:
    """``(1/pi) * integral of f exp(-|z|^2) dx dy``: z^a zbar^b -> a! [a == b]."""
    total = FieldElem()
    for exp, c in f.terms.items():
        for k, e in enumerate(exp):
            if e and k not in (_Z, _ZBAR):
                raise VariableError("Gaussian functional applies to polynomials in z, zbar only")
        a, b = exp[_Z], exp[_ZBAR]
        if a == b:
            total = total + c * factorial(a)
    return total


def gaussian_inner(f: Poly, g: Poly) -> FieldElem:
    """``<f, g>`` for the weight ``exp(-z zbar)``, in units of pi."""
    return gaussian_functional(f * conjugate(g))


# -- pointwise bounds ---------------------------------------------------------


@dataclass(frozen=True)
class TailBound:
    p: int
    k: int
    radius: float
    bound: float


def _xlogy(n: int, r: float) -> float:
    if n == 0:
        return 0.0
    if r == 0.0:
        return -math.inf
    return n * log(r)


def log_hermite_bound(p: int, k: int, radius: float) -> float:
    """log of ``(p+k)! |z|^k / k! * exp(|z|^2 / 2)``, a bound for |H_{p,p+k}|."""
    return lgamma(p + k + 1) - lgamma(k + 1) + _xlogy(k, radius) + radius * radius / 2


def tail_bound(p: int, k: int, radius: float) -> TailBound:
    return TailBound(p, k, radius, math.exp(log_hermite_bound(p, k, radius)))


def szego_bound_check(p: int, k: int, z: complex) -> bool:
    """Whether ``|H_{p,p+k}(z, conj z)|`` respects the Laguerre-derived bound."""
    if p < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    z = complex(z)
    h = eval_complex(hermite_explicit(p, p + k), {"z": z, "zbar": z.conjugate()})
    b = tail_bound(p, k, abs(z)).bound
    return abs(h) <= b * (1 + BOUND_SLACK)


# -- numeric Hermite tables -----------------------------------------------------


def hermite_table(a: complex, b: complex, pmax: int, qmax: int) -> list:
    """``H_{p,q}(a, b) / (p! q!)`` for 0 <= p <= pmax, 0 <= q <= qmax.

    Normalised recurrence ``h[p+1][q] = (a h[p][q] - h[p][q-1]) / (p+1)``; a and b
    need not be conjugate.
    """
    row = [0j] * (qmax + 1)
    row[0] = 1 + 0j
    for q in range(1, qmax + 1):
        row[q] = row[q - 1] * b / q
    table = [row]
    for p in range(pmax):
        prev = table[-1]
        new = [0j] * (qmax + 1)
        for q in range(qmax + 1):
            val = a * prev[q]
            if q:
                val -= prev[q - 1]
            new[q] = val / (p + 1)
        table.append(new)
    return table


def _sqrt_normalised_rows(p: int, a: complex, b: complex):
    """Yield, for q = 0, 1, ..., the vector ``H_{j,q}(a, b) / sqrt(q!)``, j <= p."""
    col = [a ** j for j in range(p + 1)]
    q = 0
    while True:
        yield col
        nxt = [0j] * (p + 1)
        s = math.sqrt(q + 1)
        for j in range(p + 1):
            val = b * col[j]
            if j:
                val -= j * col[j - 1]
            nxt[j] = val / s
        col = nxt
        q += 1


# -- reproducing-kernel sum ---------------------------------------------------


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    terms: int
    tail_bound: float


def _kernel_log_term_bound(q: int, p: int, m: int, rz: float, rw: float) -> float:
    return (
        lgamma(q + 1) - lgamma(q - p + 1) - lgamma(q - m + 1)
        + _xlogy(q - p, rz) + _xlogy(q - m, rw)
        + (rz * rz + rw * rw) / 2
    )


def kernel_tail_bound(n: int, p: int, m: int, z: complex, w: complex) -> float:
    """Bound on ``sum_{q >= n} |H_{p,q}(z) conj H_{m,q}(w)| / q!``; inf when the
    geometric majorant is not yet contracting at n."""
    rz, rw = abs(z), abs(w)
    if n < max(p, m):
        return math.inf
    ratio = (n + 1) * rz * rw / ((n + 1 - p) * (n + 1 - m))
    if ratio >= 1:
        return math.inf
    return math.exp(_kernel_log_term_bound(n, p, m, rz, rw)) / (1 - ratio)


def kernel_terms(p: int, m: int, z: complex, w: complex):
    """Yield ``H_{p,q}(z, conj z) conj(H_{m,q}(w, conj w)) / q!`` for q = 0, 1, ..."""
    z, w = complex(z), complex(w)
    left = _sqrt_normalised_rows(p, z, z.conjugate())
    right = _sqrt_normalised_rows(m, w, w.conjugate())
    for a, b in zip(left, right):
        yield a[p] * b[m].conjugate()


def kernel_series(p: int, m: int, z: complex, w: complex, tol: float) -> SeriesResult:
    if tol <= 0:
        raise ValueError("tol must be positive")
    if p < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    total = 0j
    for q, term in enumerate(kernel_terms(p, m, z, w)):
        bound = kernel_tail_bound(q, p, m, z, w)
        if bound < tol:
            return SeriesResult(total, q, bound)
        if q >= MAX_KERNEL_TERMS:
            raise ConvergenceError(f"kernel sum did not reach tol={tol} in {MAX_KERNEL_TERMS} terms")
        total += term
    raise AssertionError("unreachable")


def kernel_sum(p: int, m: int, z: complex, w: complex, tol: float) -> complex:
    """``sum_q H_{p,q}(z, conj z) conj(H_{m,q}(w, conj w)) / q!`` to within tol."""
    return kernel_series(p, m, z, w, tol).value


def kernel_closed_form(p: int, m: int, z: complex, w: complex) -> complex:
    """``(-1)^m H_{p,m}(z - w, conj(z - w)) exp(w conj z)``."""
    z, w = complex(z), complex(w)
    d = z - w
    h = eval_complex(hermite_explicit(p, m), {"z": d, "zbar": d.conjugate()})
    return (-1) ** m * h * cmath.exp(w * z.conjugate())


def kernel_closed_form_printed(p: int, m: int, z: complex, w: complex) -> complex:
    """Closed form without the ``(-1)^m`` factor; wrong for odd m."""
    return (-1) ** m * kernel_closed_form(p, m, z, w)


def laguerre_value(n: int, alpha: int, x: float) -> float:
    return sum((-1) ** k * comb(n + alpha, n - k) * x ** k / factorial(k) for k in range(n + 1))


def kernel_diag_closed_form(p: int, z: complex, w: complex) -> complex:
    """``L_p(|z - w|^2) exp(w conj z)``, the value of the kernel sum over p!."""
    z, w = complex(z), complex(w)
    return laguerre_value(p, 0, abs(z - w) ** 2) * cmath.exp(w * z.conjugate())


# -- quadruple sum ------------------------------------------------------------


def _exp_tail(m: int, x: float) -> float:
    """Bound on ``sum_{j > m} x^j / j!`` for x >= 0."""
    if m < 0:
        return math.exp(x)
    if x == 0:
        return 0.0
    if x >= m + 2:
        return math.inf
    first = math.exp(_xlogy(m + 1, x) - lgamma(m + 2))
    return first / (1 - x / (m + 2))


def _positive_table(r: float, pmax: int, qmax: int) -> list:
    # H^+_{p,q}(r) / (p! q!): every term of H_{p,q} taken with a plus sign
    row = [1.0] + [0.0] * qmax
    for q in range(1, qmax + 1):
        row[q] = row[q - 1] * r / q
    table = [row]
    for p in range(pmax):
        prev = table[-1]
        new = [0.0] * (qmax + 1)
        for q in range(qmax + 1):
            val = r * prev[q]
            if q:
                val += prev[q - 1]
            new[q] = val / (p + 1)
        table.append(new)
    return table


def quad_tail_bound(n: int, rz: float, ru: float, rv: float, restricted: bool = False) -> float:
    """Majorant of the part of the quadruple sum with some index above n.

    Uses ``|H_{p,q}(a, b)| <= H^+_{p,q}(r)`` with ``r = max(|a|, |b|)``, whose
    generating sums are elementary exponentials.
    """
    if restricted:
        a, b, eu, ev = ru, rv, 1.0, 1.0
    else:
        a, b, eu, ev = 1 + ru, 1 + rv, math.exp(ru), math.exp(rv)
    outer = eu * ev * (
        _exp_tail(n, a * b + a * rz) * math.exp(b * rz)
        + _exp_tail(n, a * b + b * rz) * math.exp(a * rz)
    )
    if restricted:
        return outer
    mz = _positive_table(rz, n, n)

    def delta(p: int, r: float) -> float:
        return sum(comb(p, k) * r ** (p - k) * _exp_tail(n - k, r) for k in range(p + 1))

    inner = 0.0
    for p in range(n + 1):
        atot = a ** p * eu
        da = delta(p, ru)
        for q in range(n + 1):
            btot = b ** q * ev
            inner += mz[p][q] * (da * btot + atot * delta(q, rv))
    return outer + inner


def _quad_partial(n, z, zbar, u, ubar, v, vbar, restricted):
    hz = hermite_table(z, zbar, n, n)
    hu = hermite_table(u, ubar, n, n)
    hv = hermite_table(v, vbar, n, n)
    fact = [float(factorial(k)) for k in range(n + 1)]
    if restricted:
        a = [fact[p] * hu[p][0] for p in range(n + 1)]
        b = [fact[q] * hv[q][0] for q in range(n + 1)]
    else:
        a = [fact[p] * sum(hu[p]) for p in range(n + 1)]
        b = [fact[q] * sum(hv[q]) for q in range(n + 1)]
    total = 0j
    for p in range(n + 1):
        for q in range(n + 1):
            total += hz[p][q] * a[p] * b[q]
    return total


def quad_series(
    z: complex,
    u: complex,
    v: complex,
    tol: float,
    *,
    ubar: complex | None = None,
    vbar: complex | None = None,
    restricted: bool = False,
) -> SeriesResult:
    """``sum_{p,q,r,s} H_{p,q}(z) H_{p,s}(u, ubar) H_{q,r}(v, vbar) / (p! q! r! s!)``.

    ``ubar``/``vbar`` default to the complex conjugates; passing other values
    evaluates the sum at a formal (off-diagonal) point.  ``restricted`` keeps
    only r = s = 0.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    z, u, v = complex(z), complex(u), complex(v)
    ubar = u.conjugate() if ubar is None else complex(ubar)
    vbar = v.conjugate() if vbar is None else complex(vbar)
    radii = [abs(z), abs(u), abs(v), abs(ubar), abs(vbar)]
    if max(radii) > QUAD_RADIUS:
        raise DomainError(f"quadruple sum requires |z|, |u|, |v| <= {QUAD_RADIUS}")
    rz, ru, rv = abs(z), max(abs(u), abs(ubar)), max(abs(v), abs(vbar))
    n = 4
    while True:
        bound = quad_tail_bound(n, rz, ru, rv, restricted)
        if bound < tol:
            break
        n += 2
        if n > MAX_QUAD_ORDER:
            raise ConvergenceError("quadruple sum did not converge to tolerance")
    value = _quad_partial(n, z, z.conjugate(), u, ubar, v, vbar, restricted)
    return SeriesResult(value, n, bound)


def quad_sum(z: complex, u: complex, v: complex, tol: float, **kwargs) -> complex:
    return quad_series(z, u, v, tol, **kwargs).value


def quad_closed_form_printed(z: complex, u: complex, v: complex) -> complex:
    """``exp(z(u+1)) exp(conj(z)(v+1)) exp(-(u+v+uv+1))`` as printed."""
    z, u, v = complex(z), complex(u), complex(v)
    return cmath.exp(z * (u + 1)) * cmath.exp(z.conjugate() * (v + 1)) * cmath.exp(-(u + v + u * v + 1))


def quad_closed_form(
    z: complex, u: complex, v: complex, ubar: complex | None = None, vbar: complex | None = None
) -> complex:
    """``exp(ubar + vbar + (u-1) z + (v-1) conj(z) - (u-1)(v-1))``: the value the
    quadruple sum actually converges to."""
    z, u, v = complex(z), complex(u), complex(v)
    ubar = u.conjugate() if ubar is None else complex(ubar)
    vbar = v.conjugate() if vbar is None else complex(vbar)
    return cmath.exp(ubar + vbar + (u - 1) * z + (v - 1) * z.conjugate() - (u - 1) * (v - 1))


def genfun_closed_form(z: complex, u: complex, v: complex) -> complex:
    z = complex(z)
    return cmath.exp(u * z + v * z.conjugate() - u * v)
