import cmath
import math
from math import factorial

import pytest
from hypothesis import given, strategies as st

from hermite_cx import analysis as an
from hermite_cx.multipoly import ONE_POLY, VariableError, eval_complex, var
from hermite_cx.polyfamilies import hermite_explicit as H

disk2 = st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False)
disk_half = st.complex_numbers(max_magnitude=0.5, allow_nan=False, allow_infinity=False)
small = st.integers(0, 4)
TOL = 1e-10


def H_at(p, q, z):
    z = complex(z)
    return eval_complex(H(p, q), {"z": z, "zbar": z.conjugate()})


def test_gaussian_inner_examples():
    assert an.gaussian_inner(H(2, 1), H(2, 1)) == 2
    assert an.gaussian_inner(H(1, 1), H(2, 2)) == 0
    assert an.gaussian_inner(ONE_POLY, ONE_POLY) == 1
    with pytest.raises(VariableError):
        an.gaussian_inner(var("w"), ONE_POLY)


def test_gaussian_orthogonality_small():
    for p in range(4):
        for q in range(4):
            for m in range(4):
                for n in range(4):
                    want = factorial(p) * factorial(q) if (p, q) == (m, n) else 0
                    assert an.gaussian_inner(H(p, q), H(m, n)) == want


def test_szego_examples():
    assert an.szego_bound_check(0, 0, 1.7 - 0.2j)
    assert an.szego_bound_check(1, 0, 0j)
    assert abs(H_at(1, 1, 0)) == an.tail_bound(1, 0, 0.0).bound


@given(st.integers(0, 10), st.integers(0, 10), st.floats(0, 3), st.floats(0, 3))
def test_tail_bound_monotone(p, k, r1, r2):
    lo, hi = sorted((r1, r2))
    assert an.tail_bound(p, k, lo).bound <= an.tail_bound(p, k, hi).bound


@given(st.integers(0, 10), st.integers(0, 10), st.complex_numbers(max_magnitude=3, allow_nan=False))
def test_szego_bound_holds(p, k, z):
    assert an.szego_bound_check(p, k, z)


def test_hermite_table_matches_exact_evaluation():
    a, b = 0.3 - 0.7j, -1.1 + 0.2j
    table = an.hermite_table(a, b, 6, 6)
    for p in range(7):
        for q in range(7):
            exact = eval_complex(H(p, q), {"z": a, "zbar": b}) / (factorial(p) * factorial(q))
            assert abs(table[p][q] - exact) < 1e-13


def test_kernel_examples():
    z, w = 0.3 + 0.1j, 0.2 - 0.4j
    assert abs(an.kernel_sum(0, 0, z, w, TOL) - cmath.exp(w * z.conjugate())) < TOL
    assert abs(an.kernel_sum(1, 0, z, w, TOL) - (z - w) * cmath.exp(w * z.conjugate())) < TOL
    z = 0.7 - 1.2j
    assert abs(an.kernel_sum(2, 2, z, z, TOL) / 2 - math.exp(abs(z) ** 2)) < TOL * 10


def test_kernel_argument_errors():
    with pytest.raises(ValueError):
        an.kernel_sum(1, 1, 0.1, 0.1, 0.0)


@given(small, small, disk2, disk2)
def test_kernel_agreement(p, m, z, w):
    got = an.kernel_sum(p, m, z, w, TOL)
    want = (-1) ** m * H_at(p, m, z - w) * cmath.exp(w * z.conjugate())
    assert abs(got - want) < 10 * TOL
    assert an.kernel_closed_form(p, m, z, w) == pytest.approx(want, abs=1e-14)


@given(small, disk2, disk2)
def test_kernel_diagonal_laguerre(p, z, w):
    got = an.kernel_sum(p, p, z, w, TOL) / factorial(p)
    assert abs(got - an.kernel_diag_closed_form(p, z, w)) < 10 * TOL


@given(small, small, disk2, disk2, st.sampled_from([1e-4, 1e-8, 1e-12]))
def test_kernel_tail_soundness(p, m, z, w, tol):
    res = an.kernel_series(p, m, z, w, tol)
    rem = 0j
    for q, term in enumerate(an.kernel_terms(p, m, z, w)):
        if q >= res.terms + 50:
            break
        if q >= res.terms:
            rem += term
    assert abs(rem) <= res.tail_bound
    assert res.tail_bound < tol


def brute_quad(z, u, v, n, ubar=None, vbar=None):
    """Direct truncated quadruple sum over exact polynomials evaluated pointwise."""
    ubar = u.conjugate() if ubar is None else ubar
    vbar = v.conjugate() if vbar is None else vbar
    hz = [[eval_complex(H(p, q), {"z": z, "zbar": z.conjugate()}) / (factorial(p) * factorial(q)) for q in range(n + 1)] for p in range(n + 1)]
    hu = [[eval_complex(H(p, s), {"z": u, "zbar": ubar}) / factorial(s) for s in range(n + 1)] for p in range(n + 1)]
    hv = [[eval_complex(H(q, r), {"z": v, "zbar": vbar}) / factorial(r) for r in range(n + 1)] for q in range(n + 1)]
    total = 0j
    for p in range(n + 1):
        su = sum(hu[p])
        for q in range(n + 1):
            total += hz[p][q] * su * sum(hv[q])
    return total


def test_quad_origin():
    assert abs(an.quad_sum(0, 0, 0, 1e-14) - math.exp(-1)) < 1e-12


def test_quad_against_direct_summation():
    z, u, v = 0.2, 0.1j, 0.3
    assert abs(an.quad_sum(z, u, v, 1e-12) - brute_quad(complex(z), complex(u), complex(v), 40)) < 1e-9


def test_quad_restricted_is_joint_generating_function():
    z, u, v = 0.3 - 0.2j, 0.1 + 0.4j, -0.25j
    got = an.quad_sum(z, u, v, 1e-12, restricted=True)
    assert abs(got - an.genfun_closed_form(z, u, v)) < 1e-11


def test_quad_domain():
    with pytest.raises(an.DomainError):
        an.quad_sum(0.8, 0, 0, 1e-10)
    with pytest.raises(an.DomainError):
        an.quad_sum(0, 0, 0, 1e-10, ubar=0.9)


@given(disk_half, disk_half, disk_half)
def test_quad_converges_to_corrected_closed_form(z, u, v):
    assert abs(an.quad_sum(z, u, v, 1e-11) - an.quad_closed_form(z, u, v)) < 1e-10


@given(disk_half, disk_half, disk_half, disk_half, disk_half)
def test_quad_depends_on_formal_conjugates(z, u, ubar, v, vbar):
    got = an.quad_sum(z, u, v, 1e-11, ubar=ubar, vbar=vbar)
    assert abs(got - an.quad_closed_form(z, u, v, ubar, vbar)) < 1e-10


def test_quad_tail_bound_is_sound():
    z, u, v = 0.45 + 0.1j, -0.3 + 0.35j, 0.2 - 0.4j
    for tol in (1e-3, 1e-6, 1e-9):
        res = an.quad_series(z, u, v, tol)
        far = brute_quad(z, u, v, res.terms + 30)
        assert abs(far - res.value) <= res.tail_bound
