from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from conftest import polys_in
from hermite_cx.multipoly import ONE_POLY, ZERO_POLY, mono, var
from hermite_cx.polyfamilies import hermite_explicit as H
from hermite_cx.series import (
    ConstantTermError,
    OutOfCapError,
    TruncSeries,
    coeff_extract,
    series,
    series_add,
    series_exp,
    series_mul,
)

z, zb, u, v = var("z"), var("zbar"), var("u"), var("v")


def test_mul_examples():
    assert series_mul(series(1 + z, 1), series(1 + z, 1)).body == 1 + 2 * z
    assert (series(1 + z, 3) * 0).is_zero()
    assert series_mul(series(1 + u, 3), series(1 - u, 3)).body == 1 - u**2
    assert series_add(series(z, 2), series(z**2, 5)).cap == 2


def test_body_respects_cap():
    s = series(1 + z + z**2 * zb, 2)
    assert s.body == 1 + z


def test_exp_examples():
    assert series_exp(ZERO_POLY, 5).body == ONE_POLY
    # graded over every variable, u*z already has degree 2
    assert series_exp(u * z, 2).body == 1 + u * z
    with pytest.raises(ConstantTermError):
        series_exp(1 + z, 4)


def test_graded_cap_keeps_coefficient_variables():
    s = series_exp(u * z, 2, graded=["u"])
    assert s.body == 1 + u * z + Fraction(1, 2) * u**2 * z**2
    with pytest.raises(ConstantTermError):
        series_exp(z, 3, graded=["u"])


def test_coeff_extract_examples():
    assert coeff_extract(series_exp(v * zb, 3, ["v"]), {"v": 1}) == zb
    s = series(3 + u * z + v + z**2, 4, ["u", "v"])
    assert coeff_extract(s, {"u": 0, "v": 0}) == 3 + z**2
    with pytest.raises(OutOfCapError):
        coeff_extract(series_exp(v * zb, 3, ["v"]), {"v": 4})


def test_single_variable_generating_function():
    cap = 12
    for p in range(5):
        s = series_exp(v * zb, cap, ["v"]) * ((z - v) ** p)
        for q in range(cap - p + 1):
            assert coeff_extract(s, {"v": q}) == Fraction(1, factorial(q)) * H(p, q)


def test_joint_generating_function():
    cap = 12
    s = series_exp(u * z + v * zb - u * v, cap, ["u", "v"])
    for p in range(cap + 1):
        for q in range(cap + 1 - p):
            assert coeff_extract(s, {"u": p, "v": q}) == Fraction(1, factorial(p) * factorial(q)) * H(p, q)


constant_free = polys_in(("z", "u"), max_degree=3, max_terms=4).map(lambda f: f - f.constant_term())


@given(constant_free, constant_free, st.integers(0, 6))
def test_exp_addition_law(f, g, cap):
    assert series_exp(f + g, cap) == series_exp(f, cap) * series_exp(g, cap)


@given(polys_in(("z", "u")), polys_in(("z", "u")), st.integers(0, 6))
def test_truncation_is_homomorphism(f, g, cap):
    assert series(f * g, cap) == series(f, cap) * series(g, cap)
    assert series(f + g, cap) == series(f, cap) + series(g, cap)
