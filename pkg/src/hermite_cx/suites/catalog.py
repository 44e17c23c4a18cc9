"""The identity catalog.

Each entry pairs a left- and right-hand side built by different routes.  Exact
and formal entries compare polynomials structurally; numeric entries compare
complex doubles against closed forms with certified truncation.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial

from .. import analysis
from ..diffops import iterated_partial, raise_pow, real_raise, weighted_partial
from ..exactnum import I, SQRT2, FieldElem, i_power, sqrt2_power
from ..multipoly import ZERO_POLY, Poly, conjugate, mono, partial, substitute, var
from ..polyfamilies import (
    hermite_explicit,
    hermite_operator,
    hermite_recurrence,
    hermite_scaled,
    laguerre,
    real_hermite,
)
from ..series import TruncSeries, coeff_extract, series_exp
from .runner import (
    Entry,
    IndexRangeError,
    Outcome,
    SuiteConfig,
    exact_outcome,
    numeric_outcome,
    operator_family,
    rng_for,
)

H = hermite_explicit
Z, ZB, W, WB = var("z"), var("zbar"), var("w"), var("wbar")
U, V, X, Y = var("u"), var("v"), var("x"), var("y")

ERRATA = [
    "nielsen_real: the printed denominator (m-n)! is read as (m-k)!; "
    "as printed the identity already fails at (m, n) = (2, 1).",
    "runge_real: the printed upper summation limit n is read as m; "
    "n is unbound in the display.",
    "kernel_formal, kernel_closed_form: the kernel sum equals "
    "(-1)^m H_{p,m}(z-w, conj(z-w)) exp(w conj z); the printed closed form lacks "
    "the factor (-1)^m and fails for every odd m (p = m = 1, z = w = 0 gives 1 vs -1).",
    "kernel_diag_rearranged: the leading term (-1)^p/p! exp(z zbar) is read as "
    "exp(z zbar); as printed the identity fails for every p >= 1.",
    "corollary_sums: the two vanishing sums hold only for m, n >= 1 "
    "(at n = 0 the sum is exp(z zbar)); they are checked for m, n >= 1.",
    "quad_genfun: the quadruple sum converges to "
    "exp(ubar + vbar + (u-1) z + (v-1) zbar - (u-1)(v-1)); the printed right side "
    "exp(z(u+1)) exp(zbar(v+1)) exp(-(u+v+uv+1)) agrees with it only at z = u = v = 0.",
]

KERNEL_POINTS = 25
QUAD_POINTS = 10
QUAD_PROBES = 2
ESTIMATE_BATCHES = 10
ESTIMATE_BATCH_SIZE = 100
TAIL_AUDIT_TERMS = 50


def _fact(n: int) -> Fraction:
    return Fraction(1, factorial(n))


def _grid(names: tuple, *bounds: int) -> list:
    return [dict(zip(names, t)) for t in product(*(range(b + 1) for b in bounds))]


def _grid_from(names: tuple, lo: int, *bounds: int) -> list:
    return [dict(zip(names, t)) for t in product(*(range(lo, b + 1) for b in bounds))]


@lru_cache(maxsize=None)
def _complex_family(seed: int) -> tuple:
    return tuple(operator_family(seed, ("z", "zbar")))


@lru_cache(maxsize=None)
def _real_family(seed: int) -> tuple:
    return tuple(operator_family(seed, ("x",)))


def _disk_point(rng, radius: float) -> complex:
    r = radius * math.sqrt(rng.random())
    theta = 2 * math.pi * rng.random()
    return complex(round(r * math.cos(theta), 12), round(r * math.sin(theta), 12))


def kernel_points(seed: int) -> list:
    rng = rng_for(seed, "kernel")
    return [(_disk_point(rng, 2.0), _disk_point(rng, 2.0)) for _ in range(KERNEL_POINTS)]


def quad_points(seed: int) -> list:
    """Point 0 is the origin; points 1..QUAD_POINTS are seeded in the 0.5-disk."""
    rng = rng_for(seed, "quad")
    pts = [(0j, 0j, 0j)]
    for _ in range(QUAD_POINTS):
        pts.append(tuple(_disk_point(rng, 0.5) for _ in range(3)))
    return pts


def quad_probes(seed: int) -> list:
    """Formal points (z, u, ubar, v, vbar) with ubar != conj(u), vbar != conj(v)."""
    rng = rng_for(seed, "quad-probe")
    return [tuple(_disk_point(rng, 0.5) for _ in range(5)) for _ in range(QUAD_PROBES)]


def estimate_samples(seed: int, batch: int) -> list:
    rng = rng_for(seed, f"estimate:{batch}")
    return [
        (rng.randint(0, 10), rng.randint(0, 10), _disk_point(rng, 3.0))
        for _ in range(ESTIMATE_BATCH_SIZE)
    ]


# -- real Hermite family -------------------------------------------------------


def _real_raise_pow(m: int, f: Poly) -> Poly:
    for _ in range(m):
        f = real_raise(f)
    return f


def burchnall_real_rhs(m: int, f: Poly) -> Poly:
    out = ZERO_POLY
    deriv = f
    for k in range(m + 1):
        c = Fraction((-1) ** k * factorial(m), factorial(k) * factorial(m - k))
        out = out + c * real_hermite(m - k) * deriv
        deriv = partial("x", deriv)
    return out


def _check_burchnall_real(ix, cfg):
    m = ix["m"]
    return exact_outcome(
        *((f"f[{n}]", _real_raise_pow(m, f), burchnall_real_rhs(m, f)) for n, f in enumerate(_real_family(cfg.seed)))
    )


def _real_hermite_scaled(k: int, name: str) -> Poly:
    return substitute(real_hermite(k, name), {name: SQRT2 * var(name)})


def runge_real_rhs(m: int, upper: int | None = None) -> Poly:
    upper = m if upper is None else upper
    out = ZERO_POLY
    for k in range(min(upper, m) + 1):
        out = out + _fact(k) * _fact(m - k) * _real_hermite_scaled(k, "x") * _real_hermite_scaled(m - k, "y")
    return sqrt2_power(-m) * factorial(m) * out


def _check_runge_real(ix, cfg):
    m = ix["m"]
    lhs = substitute(real_hermite(m), {"x": X + Y})
    return exact_outcome(("sum", lhs, runge_real_rhs(m)))


def nielsen_real_rhs(m: int, n: int, printed: bool = False) -> Poly:
    """Right side of the real quadratic recurrence.  ``printed=True`` uses the
    denominator (m-n)! instead of (m-k)!."""
    out = ZERO_POLY
    for k in range(min(m, n) + 1):
        den = factorial(m - n) if printed else factorial(m - k)
        c = Fraction((-2) ** k, factorial(k) * den * factorial(n - k))
        out = out + c * real_hermite(m - k) * real_hermite(n - k)
    return factorial(m) * factorial(n) * out


def _check_nielsen_real(ix, cfg):
    m, n = ix["m"], ix["n"]
    return exact_outcome(("sum", real_hermite(m + n), nielsen_real_rhs(m, n)))


# -- operator calculus ---------------------------------------------------------


def _check_rodrigues_equiv(ix, cfg):
    p, q = ix["p"], ix["q"]
    h = H(p, q)
    one = mono(1)
    return exact_outcome(
        ("weight", (-1) ** (p + q) * weighted_partial(p, q, one), h),
        ("zbar^q", (-1) ** p * weighted_partial(p, 0, mono(1, zbar=q)), h),
        ("z^p", (-1) ** q * weighted_partial(0, q, mono(1, z=p)), h),
    )


def _check_lemma_intertwine(ix, cfg):
    n = ix["n"]
    parts = []
    for k, f in enumerate(_complex_family(cfg.seed)):
        parts.append((f"z f[{k}]", raise_pow("z", n, f), (-1) ** n * weighted_partial(n, 0, f)))
        parts.append((f"zbar f[{k}]", raise_pow("zbar", n, f), (-1) ** n * weighted_partial(0, n, f)))
    return exact_outcome(*parts)


def burchnall_a_rhs(q: int, f: Poly) -> Poly:
    out = ZERO_POLY
    deriv = f
    for k in range(q + 1):
        c = Fraction((-1) ** k * factorial(q), factorial(k) * factorial(q - k))
        out = out + c * mono(1, zbar=q - k) * deriv
        deriv = partial("z", deriv)
    return out


def _check_burchnall_a(ix, cfg):
    q = ix["q"]
    return exact_outcome(
        *((f"f[{k}]", raise_pow("zbar", q, f), burchnall_a_rhs(q, f)) for k, f in enumerate(_complex_family(cfg.seed)))
    )


def burchnall_b_rhs(p: int, q: int, g: Poly) -> Poly:
    """Right side with ``z^{-p} f`` supplied directly as g."""
    out = ZERO_POLY
    deriv = g
    for k in range(q + 1):
        c = Fraction((-1) ** k * factorial(q), factorial(k) * factorial(q - k))
        out = out + c * H(p, q - k) * deriv
        deriv = partial("z", deriv)
    return out


def _check_burchnall_b(ix, cfg):
    p, q = ix["p"], ix["q"]
    zp = mono(1, z=p)
    return exact_outcome(
        *(
            (f"g[{k}]", raise_pow("zbar", q, zp * g), burchnall_b_rhs(p, q, g))
            for k, g in enumerate(_complex_family(cfg.seed))
        )
    )


def _check_explicit_expansion(ix, cfg):
    p, q = ix["p"], ix["q"]
    return exact_outcome(
        ("operator", H(p, q), hermite_operator(p, q)),
        ("recurrence", H(p, q), hermite_recurrence(p, q)),
    )


def nice_burchnall_rhs(p: int, q: int, f: Poly) -> Poly:
    """``p! q! sum_{j,k} (-1)^{j+k}/(j! k!) H_{p-j,q-k}/((p-j)!(q-k)!) dzbar^j dz^k f``."""
    out = ZERO_POLY
    dz = f
    for k in range(q + 1):
        d = dz
        for j in range(p + 1):
            c = Fraction(
                (-1) ** (j + k) * factorial(p) * factorial(q),
                factorial(j) * factorial(k) * factorial(p - j) * factorial(q - k),
            )
            out = out + c * H(p - j, q - k) * d
            d = partial("zbar", d)
        dz = partial("z", dz)
    return out


def _check_nice_burchnall(ix, cfg):
    p, q = ix["p"], ix["q"]
    parts = []
    for k, f in enumerate(_complex_family(cfg.seed)):
        rhs = nice_burchnall_rhs(p, q, f)
        wp = weighted_partial(p, q, f)
        parts.append((f"raise f[{k}]", raise_pow("z", p, raise_pow("zbar", q, f)), rhs))
        parts.append((f"weight f[{k}]", wp, (-1) ** (p + q) * rhs))
    return exact_outcome(*parts)


# -- recurrences and symmetry ------------------------------------------------


def _check_derivative_z(ix, cfg):
    p, q = ix["p"], ix["q"]
    zp = mono(1, z=p)
    return exact_outcome(
        ("dz H", partial("z", H(p, q)), p * H(p - 1, q)),
        ("commute", partial("z", raise_pow("zbar", q, zp)), raise_pow("zbar", q, partial("z", zp))),
    )


def _check_derivative_zbar(ix, cfg):
    p, q = ix["p"], ix["q"]
    zq = mono(1, zbar=q)
    return exact_outcome(
        ("dzbar H", partial("zbar", H(p, q)), q * H(p, q - 1)),
        ("commute", partial("zbar", raise_pow("z", p, zq)), raise_pow("z", p, partial("zbar", zq))),
    )


def _check_eigen(ix, cfg):
    p, q = ix["p"], ix["q"]
    h = H(p, q)
    lhs = ZB * partial("zbar", h) - partial("z", partial("zbar", h))
    return exact_outcome(("laplacian", lhs, q * h))


def _check_recurrences(ix, cfg):
    p, q = ix["p"], ix["q"]
    h = H(p, q)
    return exact_outcome(
        ("a", H(p + 1, q), Z * h - partial("zbar", h)),
        ("b", H(p + 1, q), Z * h - q * H(p, q - 1)),
        ("a'", H(p, q + 1), ZB * h - partial("z", h)),
        ("b'", H(p, q + 1), ZB * h - p * H(p - 1, q)),
    )


def _check_conj_symmetry(ix, cfg):
    p, q = ix["p"], ix["q"]
    return exact_outcome(("conj", conjugate(H(p, q)), H(q, p)))


# -- quadratic recurrences ------------------------------------------------------


def nielsen_v1_rhs(p: int, q: int, s: int) -> Poly:
    out = ZERO_POLY
    for k in range(min(p, q) + 1):
        c = Fraction((-1) ** k * factorial(p) * factorial(q), factorial(k) * factorial(q - k) * factorial(p - k))
        out = out + c * mono(1, zbar=q - k) * H(p - k, s)
    return out


def nielsen_v2_rhs(p: int, s: int, q: int) -> Poly:
    out = ZERO_POLY
    for k in range(min(q, s) + 1):
        c = Fraction((-1) ** k * factorial(q) * factorial(s), factorial(k) * factorial(s - k) * factorial(q - k))
        out = out + c * mono(1, z=s - k) * H(p, q - k)
    return out


def nielsen_v3_rhs(p: int, s: int, q: int, scale=1) -> Poly:
    """``sqrt2^{p+s-q} q! sum_k H_{s,k}(c z) H_{p,q-k}(c z) / (k! (q-k)!)`` with c = scale."""
    out = ZERO_POLY
    for k in range(q + 1):
        out = out + _fact(k) * _fact(q - k) * hermite_scaled(s, k, scale) * hermite_scaled(p, q - k, scale)
    return sqrt2_power(p + s - q) * factorial(q) * out


def _check_nielsen_v1(ix, cfg):
    p, q, s = ix["p"], ix["q"], ix["s"]
    return exact_outcome(("sum", H(p, q + s), nielsen_v1_rhs(p, q, s)))


def _check_nielsen_v2(ix, cfg):
    p, s, q = ix["p"], ix["s"], ix["q"]
    return exact_outcome(("sum", H(p + s, q), nielsen_v2_rhs(p, s, q)))


def _check_nielsen_v3(ix, cfg):
    p, s, q = ix["p"], ix["s"], ix["q"]
    return exact_outcome(
        ("scaled", hermite_scaled(p + s, q, SQRT2), nielsen_v3_rhs(p, s, q)),
        ("z/sqrt2", H(p + s, q), nielsen_v3_rhs(p, s, q, SQRT2.inverse())),
    )


def nielsen_full_rhs(p: int, q: int, m: int, n: int) -> Poly:
    out = ZERO_POLY
    for j in range(min(p, n) + 1):
        for k in range(min(q, m) + 1):
            c = Fraction(
                (-1) ** (j + k),
                factorial(j) * factorial(k) * factorial(p - j) * factorial(q - k) * factorial(m - k) * factorial(n - j),
            )
            out = out + c * H(p - j, q - k) * H(m - k, n - j)
    return factorial(p) * factorial(q) * factorial(m) * factorial(n) * out


def _check_nielsen_full(ix, cfg):
    p, q, m, n = ix["p"], ix["q"], ix["m"], ix["n"]
    return exact_outcome(("sum", H(p + m, q + n), nielsen_full_rhs(p, q, m, n)))


def nielsen_modulus_rhs(p: int, q: int) -> Poly:
    out = ZERO_POLY
    for j in range(p + 1):
        for k in range(q + 1):
            h = H(p - j, q - k)
            c = Fraction((-1) ** (j + k), factorial(j) * factorial(k) * (factorial(p - j) * factorial(q - k)) ** 2)
            out = out + c * h * conjugate(h)
    return (factorial(p) * factorial(q)) ** 2 * out


def _check_nielsen_modulus(ix, cfg):
    p, q = ix["p"], ix["q"]
    return exact_outcome(("sum", H(p + q, p + q), nielsen_modulus_rhs(p, q)))


# -- generating functions -------------------------------------------------------


@lru_cache(maxsize=None)
def _genfun_u_series(q: int, cap: int) -> TruncSeries:
    return series_exp(U * Z, cap, ["u"]) * ((ZB - U) ** q)


@lru_cache(maxsize=None)
def _genfun_v_series(p: int, cap: int) -> TruncSeries:
    return series_exp(V * ZB, cap, ["v"]) * ((Z - V) ** p)


@lru_cache(maxsize=None)
def _genfun_joint_series(cap: int) -> TruncSeries:
    return series_exp(U * Z + V * ZB - U * V, cap, ["u", "v"])


def _check_genfun_u(ix, cfg):
    p, q = ix["p"], ix["q"]
    coeff = coeff_extract(_genfun_u_series(q, cfg.cap), {"u": p})
    return exact_outcome(("u^p", coeff, _fact(p) * H(p, q)))


def _check_genfun_v(ix, cfg):
    p, q = ix["p"], ix["q"]
    coeff = coeff_extract(_genfun_v_series(p, cfg.cap), {"v": q})
    return exact_outcome(("v^q", coeff, _fact(q) * H(p, q)))


def _check_genfun_joint(ix, cfg):
    p, q = ix["p"], ix["q"]
    coeff = coeff_extract(_genfun_joint_series(cfg.cap), {"u": p, "v": q})
    return exact_outcome(("u^p v^q", coeff, _fact(p) * _fact(q) * H(p, q)))


_ZZ = ("z", "zbar")


@lru_cache(maxsize=None)
def corollary_double_sum(cap: int) -> tuple:
    """(truncated sum of zbar^p z^q H_{p,q}/(p! q!), truncated exp(z zbar))."""
    total = ZERO_POLY
    for p in range(cap // 2 + 1):
        for q in range(cap // 2 + 1):
            total = total + _fact(p) * _fact(q) * mono(1, zbar=p, z=q) * H(p, q)
    return total.truncate(cap, _ZZ), series_exp(Z * ZB, cap, _ZZ).body


def corollary_row_sum(n: int, cap: int) -> Poly:
    """Truncation of ``sum_p zbar^p / p! H_{p,n}``; terms with p > (cap+n)/2 lie
    entirely above the cap."""
    total = ZERO_POLY
    for p in range((cap + n) // 2 + 1):
        total = total + _fact(p) * mono(1, zbar=p) * H(p, n)
    return total.truncate(cap, _ZZ)


def corollary_col_sum(m: int, cap: int) -> Poly:
    total = ZERO_POLY
    for q in range((cap + m) // 2 + 1):
        total = total + _fact(q) * mono(1, z=q) * H(m, q)
    return total.truncate(cap, _ZZ)


def _check_corollary_sums(ix, cfg):
    m, n = ix["m"], ix["n"]
    lhs, rhs = corollary_double_sum(cfg.cap)
    return exact_outcome(
        ("double", lhs, rhs),
        ("row n", corollary_row_sum(n, cfg.cap), ZERO_POLY),
        ("col m", corollary_col_sum(m, cfg.cap), ZERO_POLY),
    )


# -- reproducing kernel -------------------------------------------------------


def kernel_formal_sides(p: int, m: int, cap: int, signed: bool = True) -> tuple:
    """Truncated left and right sides of the kernel sum as a formal identity in
    (z, zbar, w, wbar).  Terms with q > (cap+p+m)/2 lie entirely above the cap."""
    lhs = ZERO_POLY
    for q in range((cap + p + m) // 2 + 1):
        lhs = lhs + _fact(q) * H(p, q) * conjugate(H(m, q, "w"))
    lhs = lhs.truncate(cap)
    shifted = substitute(H(p, m), {"z": Z - W, "zbar": ZB - WB})
    sign = (-1) ** m if signed else 1
    rhs = (series_exp(W * ZB, cap) * (sign * shifted)).body
    return lhs, rhs


def _check_kernel_formal(ix, cfg):
    lhs, rhs = kernel_formal_sides(ix["p"], ix["m"], cfg.cap)
    return exact_outcome(("sum", lhs, rhs))


def kernel_tail_audit(p: int, m: int, z: complex, w: complex, result) -> float:
    """Sum of the next TAIL_AUDIT_TERMS terms past the truncation point."""
    rem = 0j
    for q, term in enumerate(analysis.kernel_terms(p, m, z, w)):
        if q >= result.terms + TAIL_AUDIT_TERMS:
            break
        if q >= result.terms:
            rem += term
    return abs(rem)


def _check_kernel_closed_form(ix, cfg):
    p, m, point = ix["p"], ix["m"], ix["point"]
    z, w = kernel_points(cfg.seed)[point]
    res = analysis.kernel_series(p, m, z, w, cfg.tol / 10)
    ref = analysis.kernel_closed_form(p, m, z, w)
    out = numeric_outcome(cfg.tol, ("closed", res.value, ref))
    rem = kernel_tail_audit(p, m, z, w, res)
    sound = rem <= res.tail_bound
    witness = f"{out.witness}; z={z}, w={w}, terms={res.terms}, tail_bound={res.tail_bound:.3e}, audited_tail={rem:.3e}"
    return Outcome(out.ok and sound, witness)


def kernel_diag_formal_sides(p: int, cap: int) -> tuple:
    lhs = ZERO_POLY
    for q in range((cap + 2 * p) // 2 + 1):
        lhs = lhs + Fraction(1, factorial(p) * factorial(q)) * H(p, q) * conjugate(H(p, q, "w"))
    lhs = lhs.truncate(cap)
    lag = substitute(laguerre(p, 0), {"t": (Z - W) * (ZB - WB)})
    rhs = (series_exp(W * ZB, cap) * lag).body
    return lhs, rhs


def _check_kernel_diag(ix, cfg):
    p = ix["p"]
    if "point" not in ix:
        lhs, rhs = kernel_diag_formal_sides(p, cfg.cap)
        return exact_outcome(("sum", lhs, rhs))
    z, w = kernel_points(cfg.seed)[ix["point"]]
    res = analysis.kernel_series(p, p, z, w, cfg.tol / 10)
    out = numeric_outcome(
        cfg.tol, ("laguerre", res.value / factorial(p), analysis.kernel_diag_closed_form(p, z, w))
    )
    return Outcome(out.ok, f"{out.witness}; z={z}, w={w}, terms={res.terms}")


def kernel_rearranged_sides(p: int, cap: int, printed: bool = False) -> tuple:
    lhs = ZERO_POLY
    for n in range(cap // 2 + 1):
        h = H(p + n, p)
        lhs = lhs + Fraction(1, factorial(p + n) * factorial(p)) * h * conjugate(h)
    lhs = lhs.truncate(cap, _ZZ)
    lead = Fraction((-1) ** p, factorial(p)) if printed else 1
    rhs = lead * series_exp(Z * ZB, cap, _ZZ).body
    for q in range(p):
        h = H(p, q)
        rhs = rhs - Fraction(1, factorial(p) * factorial(q)) * h * conjugate(h)
    return lhs, rhs.truncate(cap, _ZZ)


def _check_kernel_diag_rearranged(ix, cfg):
    lhs, rhs = kernel_rearranged_sides(ix["p"], cfg.cap)
    return exact_outcome(("sum", lhs, rhs))


# -- quadruple sum -------------------------------------------------------------


def _check_quad_genfun(ix, cfg):
    inner_tol = cfg.tol / 10
    if "probe" in ix:
        z, u, ubar, v, vbar = quad_probes(cfg.seed)[ix["probe"]]
        val = analysis.quad_sum(z, u, v, inner_tol, ubar=ubar, vbar=vbar)
        formal = analysis.quad_closed_form(z, u, v, ubar, vbar)
        at_conj = analysis.quad_closed_form(z, u, v)
        printed = analysis.quad_closed_form_printed(z, u, v)
        out = numeric_outcome(cfg.tol, ("formal", val, formal))
        return Outcome(
            out.ok,
            f"{out.witness}; |sum - value at ubar=conj(u)|={abs(val - at_conj):.3e}, "
            f"|sum - printed|={abs(val - printed):.3e}; z={z}, u={u}, ubar={ubar}, v={v}, vbar={vbar}",
        )
    z, u, v = quad_points(cfg.seed)[ix["point"]]
    full = analysis.quad_sum(z, u, v, inner_tol)
    restricted = analysis.quad_sum(z, u, v, inner_tol, restricted=True)
    out = numeric_outcome(
        cfg.tol,
        ("closed", full, analysis.quad_closed_form(z, u, v)),
        ("r=s=0", restricted, analysis.genfun_closed_form(z, u, v)),
    )
    printed_err = abs(full - analysis.quad_closed_form_printed(z, u, v))
    return Outcome(out.ok, f"{out.witness}; printed_err={printed_err:.3e}; z={z}, u={u}, v={v}")


# -- addition formula ----------------------------------------------------------


def runge_complex_rhs(p: int, q: int) -> Poly:
    out = ZERO_POLY
    for j in range(p + 1):
        for k in range(q + 1):
            c = Fraction(1, factorial(j) * factorial(k) * factorial(p - j) * factorial(q - k))
            out = out + c * hermite_scaled(j, k, SQRT2) * hermite_scaled(p - j, q - k, SQRT2, "w")
    return sqrt2_power(-(p + q)) * (factorial(p) * factorial(q)) * out


def _check_runge_complex(ix, cfg):
    p, q = ix["p"], ix["q"]
    lhs = substitute(H(p, q), {"z": Z + W, "zbar": ZB + WB})
    return exact_outcome(("sum", lhs, runge_complex_rhs(p, q)))


# -- analysis-backed checks -----------------------------------------------------


def _check_estimate_bound(ix, cfg):
    worst = 0.0
    failures = []
    for p, k, z in estimate_samples(cfg.seed, ix["batch"]):
        h = abs(H(p, p + k).eval_complex({"z": z, "zbar": z.conjugate()}))
        ratio = h / analysis.tail_bound(p, k, abs(z)).bound
        worst = max(worst, ratio)
        if not analysis.szego_bound_check(p, k, z):
            failures.append((p, k, z))
    witness = f"max |H|/bound = {worst:.6f} over {ESTIMATE_BATCH_SIZE} samples"
    if failures:
        witness += f"; violations: {failures[:3]}"
    return Outcome(not failures, witness)


def _check_orthogonality(ix, cfg):
    p, q, m, n = ix["p"], ix["q"], ix["m"], ix["n"]
    got = analysis.gaussian_inner(H(p, q), H(m, n))
    want = factorial(p) * factorial(q) if (p, q) == (m, n) else 0
    ok = got == want
    return Outcome(ok, f"{got}" if ok else f"got {got}, expected {want}")


def real_connection_rhs(p: int, q: int) -> Poly:
    out = ZERO_POLY
    for j in range(p + 1):
        for k in range(q + 1):
            c = i_power(j + k) * Fraction(
                (-1) ** (q + j), factorial(j) * factorial(k) * factorial(p - j) * factorial(q - k)
            )
            out = out + c * real_hermite(j + k, "x") * real_hermite(p + q - j - k, "y")
    return (FieldElem(0, Fraction(1, 2)) ** (p + q)) * (factorial(p) * factorial(q)) * out


def _check_real_connection(ix, cfg):
    p, q = ix["p"], ix["q"]
    lhs = substitute(H(p, q), {"z": X + I * Y, "zbar": X - I * Y})
    return exact_outcome(("sum", lhs, real_connection_rhs(p, q)))


def _check_laguerre_connection(ix, cfg):
    p, k = ix["p"], ix["k"]
    lag = substitute(laguerre(p, k), {"t": Z * ZB})
    c = (-1) ** p * factorial(p)
    return exact_outcome(
        ("H_{p,p+k}", H(p, p + k), c * mono(1, zbar=k) * lag),
        ("H_{p+k,p}", H(p + k, p), c * mono(1, z=k) * lag),
    )


# -- validity domains -----------------------------------------------------------


def _within_cap(*names):
    def valid(ix, cfg):
        total = sum(ix[n] for n in names)
        if total > cfg.cap:
            return f"extracted degree {total} exceeds cap {cfg.cap}"
        return None

    return valid


def _positive(*names):
    def valid(ix, cfg):
        bad = [n for n in names if ix[n] < 1]
        if bad:
            return f"vanishing sums hold only for indices >= 1 (got {bad} = 0)"
        return None

    return valid


def _below(name, bound):
    def valid(ix, cfg):
        if ix.get(name, 0) >= bound:
            return f"{name} must be < {bound}"
        return None

    return valid


def _quad_valid(ix, cfg):
    if ("point" in ix) == ("probe" in ix):
        return "exactly one of point / probe is required"
    if "point" in ix and ix["point"] > QUAD_POINTS:
        return f"point must be <= {QUAD_POINTS}"
    if "probe" in ix and ix["probe"] >= QUAD_PROBES:
        return f"probe must be < {QUAD_PROBES}"
    return None


def _kernel_diag_valid(ix, cfg):
    if ix.get("point", 0) >= KERNEL_POINTS:
        return f"point must be < {KERNEL_POINTS}"
    return None


def _requires(*names):
    def valid(ix, cfg):
        missing = [n for n in names if n not in ix]
        return f"missing indices {missing}" if missing else None

    return valid


def _all(*checks):
    def valid(ix, cfg):
        for c in checks:
            msg = c(ix, cfg)
            if msg:
                return msg
        return None

    return valid


def _entry(id, display, names, kind, space, check, valid=None, kind_of=None, required=None):
    base = _requires(*(names if required is None else required))
    return Entry(
        id=id,
        display=display,
        index_names=names,
        kind=kind,
        space=space,
        check=check,
        valid=_all(base, valid) if valid else base,
        kind_of=kind_of,
    )


def _pq(cfg):
    return _grid(("p", "q"), cfg.max_index, cfg.max_index)


def _kernel_diag_space(cfg):
    k = cfg.multi
    formal = [{"p": p} for p in range(k + 1)]
    numeric = [{"p": p, "point": j} for p in range(k + 1) for j in range(KERNEL_POINTS)]
    return formal + numeric


_ENTRIES = [
    _entry(
        "burchnall_real", "(-D+2x)^m f = m! sum_k (-1)^k/k! H_{m-k}(x)/(m-k)! D^k f",
        ("m",), "exact", lambda c: _grid(("m",), c.max_index), _check_burchnall_real,
    ),
    _entry(
        "runge_real", "H_m(x+y) = 2^{-m/2} m! sum_{k<=m} H_k(sqrt2 x)/k! H_{m-k}(sqrt2 y)/(m-k)!",
        ("m",), "exact", lambda c: _grid(("m",), c.max_index), _check_runge_real,
    ),
    _entry(
        "nielsen_real", "H_{m+n}(x) = m! n! sum_k (-2)^k/k! H_{m-k}(x)/(m-k)! H_{n-k}(x)/(n-k)!",
        ("m", "n"), "exact", lambda c: _grid(("m", "n"), c.max_index, c.max_index), _check_nielsen_real,
    ),
    _entry(
        "rodrigues_equiv",
        "H_{p,q} = (-1)^{p+q} e^{z zbar} dzbar^p dz^q e^{-z zbar} "
        "= (-1)^p e^{z zbar} dzbar^p(zbar^q e^{-z zbar}) = (-1)^q e^{z zbar} dz^q(z^p e^{-z zbar})",
        ("p", "q"), "exact", _pq, _check_rodrigues_equiv,
    ),
    _entry(
        "lemma_intertwine", "(-dzbar+z)^n f = (-1)^n e^{z zbar} dzbar^n(e^{-z zbar} f), likewise for (-dz+zbar)",
        ("n",), "exact", lambda c: _grid(("n",), c.max_index), _check_lemma_intertwine,
    ),
    _entry(
        "burchnall_a", "(-dz+zbar)^q f = q! sum_k (-1)^k/k! zbar^{q-k}/(q-k)! dz^k f",
        ("q",), "exact", lambda c: _grid(("q",), c.max_index), _check_burchnall_a,
    ),
    _entry(
        "burchnall_b", "(-dz+zbar)^q f = q! sum_k (-1)^k/k! H_{p,q-k}/(q-k)! dz^k(z^{-p} f), f = z^p g",
        ("p", "q"), "exact", _pq, _check_burchnall_b,
    ),
    _entry(
        "explicit_expansion", "H_{p,q} = p! q! sum_k (-1)^k/k! zbar^{q-k}/(q-k)! z^{p-k}/(p-k)!",
        ("p", "q"), "exact", _pq, _check_explicit_expansion,
    ),
    _entry(
        "nice_burchnall",
        "(-dzbar+z)^p (-dz+zbar)^q f = (-1)^{p+q} e^{z zbar} dzbar^p dz^q(e^{-z zbar} f) "
        "= p! q! sum_{j,k} (-1)^{j+k}/(j! k!) H_{p-j,q-k}/((p-j)!(q-k)!) dzbar^j dz^k f",
        ("p", "q"), "exact", _pq, _check_nice_burchnall,
    ),
    _entry("derivative_z", "dz H_{p,q} = p H_{p-1,q}", ("p", "q"), "exact", _pq, _check_derivative_z),
    _entry("derivative_zbar", "dzbar H_{p,q} = q H_{p,q-1}", ("p", "q"), "exact", _pq, _check_derivative_zbar),
    _entry("eigen", "(-dz+zbar) dzbar H_{p,q} = q H_{p,q}", ("p", "q"), "exact", _pq, _check_eigen),
    _entry(
        "recurrences",
        "H_{p+1,q} = z H - dzbar H = z H - q H_{p,q-1}; H_{p,q+1} = zbar H - dz H = zbar H - p H_{p-1,q}",
        ("p", "q"), "exact", _pq, _check_recurrences,
    ),
    _entry("conj_symmetry", "conj H_{p,q} = H_{q,p}", ("p", "q"), "exact", _pq, _check_conj_symmetry),
    _entry(
        "nielsen_v1", "H_{p,q+s} = p! q! sum_k (-1)^k/k! zbar^{q-k}/(q-k)! H_{p-k,s}/(p-k)!",
        ("p", "q", "s"), "exact", lambda c: _grid(("p", "q", "s"), c.multi, c.multi, c.multi), _check_nielsen_v1,
    ),
    _entry(
        "nielsen_v2", "H_{p+s,q} = q! s! sum_k (-1)^k/k! z^{s-k}/(s-k)! H_{p,q-k}/(q-k)!",
        ("p", "s", "q"), "exact", lambda c: _grid(("p", "s", "q"), c.multi, c.multi, c.multi), _check_nielsen_v2,
    ),
    _entry(
        "nielsen_v3", "H_{p+s,q}(sqrt2 z) = sqrt2^{p+s-q} q! sum_k H_{s,k}(z) H_{p,q-k}(z)/(k!(q-k)!)",
        ("p", "s", "q"), "exact", lambda c: _grid(("p", "s", "q"), c.multi, c.multi, c.multi), _check_nielsen_v3,
    ),
    _entry(
        "nielsen_full",
        "H_{p+m,q+n} = p!q!m!n! sum_{j<=min(p,n), k<=min(q,m)} (-1)^{j+k}/(j!k!) "
        "H_{p-j,q-k}/((p-j)!(q-k)!) H_{m-k,n-j}/((m-k)!(n-j)!)",
        ("p", "q", "m", "n"), "exact",
        lambda c: _grid(("p", "q", "m", "n"), c.multi, c.multi, c.multi, c.multi), _check_nielsen_full,
    ),
    _entry(
        "nielsen_modulus",
        "H_{p+q,p+q} = (p!q!)^2 sum_{j,k} (-1)^{j+k}/(j!k!) |H_{p-j,q-k}|^2/((p-j)!(q-k)!)^2",
        ("p", "q"), "exact", _pq, _check_nielsen_modulus,
    ),
    _entry(
        "genfun_u", "sum_p u^p/p! H_{p,q} = (zbar-u)^q e^{uz}",
        ("p", "q"), "formal", lambda c: _grid(("p", "q"), c.cap, c.max_index), _check_genfun_u,
        _within_cap("p"),
    ),
    _entry(
        "genfun_v", "sum_q v^q/q! H_{p,q} = (z-v)^p e^{v zbar}",
        ("p", "q"), "formal", lambda c: _grid(("p", "q"), c.max_index, c.cap), _check_genfun_v,
        _within_cap("q"),
    ),
    _entry(
        "genfun_joint", "sum_{p,q} u^p v^q/(p! q!) H_{p,q} = e^{uz + v zbar - uv}",
        ("p", "q"), "formal",
        lambda c: [ix for ix in _grid(("p", "q"), c.cap, c.cap) if ix["p"] + ix["q"] <= c.cap],
        _check_genfun_joint, _within_cap("p", "q"),
    ),
    _entry(
        "corollary_sums",
        "sum_{p,q} zbar^p z^q/(p!q!) H_{p,q} = e^{z zbar}; sum_p zbar^p/p! H_{p,n} = 0; sum_q z^q/q! H_{m,q} = 0",
        ("m", "n"), "formal", lambda c: _grid_from(("m", "n"), 1, c.max_index, c.max_index),
        _check_corollary_sums, _positive("m", "n"),
    ),
    _entry(
        "kernel_formal", "sum_q H_{p,q}(z) conj H_{m,q}(w)/q! = (-1)^m H_{p,m}(z-w) e^{w zbar}",
        ("p", "m"), "formal", lambda c: _grid(("p", "m"), c.multi, c.multi), _check_kernel_formal,
    ),
    _entry(
        "kernel_closed_form", "sum_q H_{p,q}(z) conj H_{m,q}(w)/q! = (-1)^m H_{p,m}(z-w) e^{w conj z} at complex points",
        ("p", "m", "point"), "numeric",
        lambda c: _grid(("p", "m", "point"), c.multi, c.multi, KERNEL_POINTS - 1), _check_kernel_closed_form,
        _below("point", KERNEL_POINTS),
    ),
    _entry(
        "kernel_diag", "sum_q H_{p,q}(z) conj H_{p,q}(w)/(p! q!) = L_p(|z-w|^2) e^{w conj z}",
        ("p", "point"), "formal", _kernel_diag_space, _check_kernel_diag, _kernel_diag_valid,
        kind_of=lambda ix: "numeric" if "point" in ix else "formal", required=("p",),
    ),
    _entry(
        "kernel_diag_rearranged",
        "sum_n |H_{p+n,p}|^2/((p+n)! p!) = e^{z zbar} - sum_{q<p} |H_{p,q}|^2/(p! q!)",
        ("p",), "formal", lambda c: _grid(("p",), c.multi), _check_kernel_diag_rearranged,
    ),
    _entry(
        "quad_genfun",
        "sum_{p,q,r,s} H_{p,q}(z) H_{p,s}(u) H_{q,r}(v)/(p!q!r!s!) = e^{ubar+vbar+(u-1)z+(v-1)zbar-(u-1)(v-1)}",
        ("point", "probe"), "numeric",
        lambda c: [{"point": j} for j in range(QUAD_POINTS + 1)] + [{"probe": k} for k in range(QUAD_PROBES)],
        _check_quad_genfun, _quad_valid, required=(),
    ),
    _entry(
        "runge_complex",
        "H_{p,q}(z+w) = p! q! 2^{-(p+q)/2} sum_{j,k} H_{j,k}(sqrt2 z)/(j! k!) H_{p-j,q-k}(sqrt2 w)/((p-j)!(q-k)!)",
        ("p", "q"), "exact", _pq, _check_runge_complex,
    ),
    _entry(
        "estimate_bound", "|H_{p,p+k}(z)| <= (p+k)! |z|^k/k! e^{|z|^2/2}",
        ("batch",), "numeric", lambda c: _grid(("batch",), ESTIMATE_BATCHES - 1), _check_estimate_bound,
        _below("batch", ESTIMATE_BATCHES),
    ),
    _entry(
        "orthogonality", "<H_{p,q}, H_{m,n}> = pi p! q! [p=m][q=n]",
        ("p", "q", "m", "n"), "exact",
        lambda c: _grid(("p", "q", "m", "n"), c.max_index, c.max_index, c.max_index, c.max_index),
        _check_orthogonality,
    ),
    _entry(
        "real_connection",
        "H_{p,q}(x+iy) = p!q!(i/2)^{p+q} sum_{j,k} (-1)^{q+j} i^{j+k} H_{j+k}(x)/(j!k!) H_{p+q-j-k}(y)/((p-j)!(q-k)!)",
        ("p", "q"), "exact", _pq, _check_real_connection,
    ),
    _entry(
        "laguerre_connection", "H_{p,p+k} = (-1)^p p! zbar^k L_p^(k)(z zbar), and its conjugate",
        ("p", "k"), "exact", lambda c: _grid(("p", "k"), c.max_index, c.max_index), _check_laguerre_connection,
    ),
]

CATALOG = {e.id: e for e in _ENTRIES}
assert len(CATALOG) == len(_ENTRIES)
