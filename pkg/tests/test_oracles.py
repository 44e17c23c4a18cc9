"""Cross-checks against independent computer algebra (sympy), plus explicit
demonstrations that the uncorrected identity forms are rejected."""

import math

import pytest
import sympy as sp

from hermite_cx import analysis as an
from hermite_cx.multipoly import ZERO_POLY, substitute, var, var_index
from hermite_cx.polyfamilies import hermite_explicit as H, laguerre, real_hermite
from hermite_cx.suites.catalog import (
    corollary_row_sum,
    kernel_formal_sides,
    kernel_rearranged_sides,
    nielsen_real_rhs,
    runge_real_rhs,
)
from hermite_cx.series import series_exp

Z, ZB, X, T = sp.symbols("z zbar x t")
SYMS = {"z": Z, "zbar": ZB, "x": X, "t": T}


def to_sympy(f):
    out = 0
    names = ("z", "zbar", "x", "t")
    for exp, c in f.terms.items():
        a, b, cc, d = c.coords()
        coeff = sp.Rational(a) + sp.I * sp.Rational(b) + sp.sqrt(2) * (sp.Rational(cc) + sp.I * sp.Rational(d))
        term = coeff
        for n in names:
            term *= SYMS[n] ** exp[var_index(n)]
        out += term
    return sp.expand(out)


@pytest.mark.parametrize("p", range(5))
@pytest.mark.parametrize("q", range(5))
def test_rodrigues_by_symbolic_differentiation(p, q):
    weight = sp.exp(-Z * ZB)
    d = sp.diff(weight, *([Z] * q + [ZB] * p)) if p + q else weight
    oracle = sp.expand(sp.simplify((-1) ** (p + q) * d / weight))
    assert sp.expand(to_sympy(H(p, q)) - oracle) == 0


@pytest.mark.parametrize("m", range(9))
def test_real_hermite_against_sympy(m):
    assert sp.expand(to_sympy(real_hermite(m)) - sp.hermite(m, X)) == 0


@pytest.mark.parametrize("n", range(6))
@pytest.mark.parametrize("alpha", range(4))
def test_laguerre_against_sympy(n, alpha):
    assert sp.expand(to_sympy(laguerre(n, alpha)) - sp.assoc_laguerre(n, alpha, T)) == 0


def test_real_nielsen_printed_denominator_is_caught():
    assert real_hermite(3) != nielsen_real_rhs(2, 1, printed=True)
    assert real_hermite(3) == nielsen_real_rhs(2, 1)


def test_real_runge_needs_full_range():
    # stopping the sum early (any bound below m) drops terms
    x, y = var("x"), var("y")
    lhs = substitute(real_hermite(3), {"x": x + y})
    assert lhs == runge_real_rhs(3)
    assert lhs != runge_real_rhs(3, upper=2)


def test_kernel_printed_sign_is_caught():
    lhs, rhs = kernel_formal_sides(1, 1, 8, signed=False)
    assert lhs != rhs
    assert an.kernel_sum(1, 1, 0, 0, 1e-12) == pytest.approx(1.0, abs=1e-12)
    assert an.kernel_closed_form_printed(1, 1, 0, 0) == pytest.approx(-1.0)


def test_rearranged_kernel_printed_coefficient_is_caught():
    lhs, rhs = kernel_rearranged_sides(1, 8, printed=True)
    assert lhs != rhs
    lhs, rhs = kernel_rearranged_sides(1, 8)
    assert lhs == rhs


def test_vanishing_sum_fails_at_zero_index():
    cap = 8
    assert corollary_row_sum(0, cap) == series_exp(var("z") * var("zbar"), cap, ("z", "zbar")).body
    assert corollary_row_sum(1, cap) == ZERO_POLY


def test_quad_printed_form_only_agrees_at_origin():
    assert an.quad_closed_form_printed(0, 0, 0) == pytest.approx(math.exp(-1), abs=1e-15)
    z, u, v = 0.2, 0.1j, 0.3
    val = an.quad_sum(z, u, v, 1e-12)
    assert abs(val - an.quad_closed_form(z, u, v)) < 1e-10
    assert abs(val - an.quad_closed_form_printed(z, u, v)) > 1e-2
