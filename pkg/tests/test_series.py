from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kleinseries import RationalFn, ScaledSeries, ScaleError, ScaleMismatch, descale, monomial_frac, rf_to_series
from kleinseries.series import binom_power, inv_one_minus_power, series_from_products, series_mul


def S(c, scale=1, order=10):
    return ScaledSeries(tuple(c), scale, order)


def test_mul_examples():
    one_t = S([1, 1])
    assert series_mul(one_t, one_t).coeffs[:4] == (1, 2, 1, 0)
    s = S([3, Fraction(1, 2), -4])
    assert series_mul(s, ScaledSeries.one(order=10)) == s
    geo = S([1] * 6, order=5)
    assert series_mul(geo, S([1, -1], order=5)) == ScaledSeries.one(order=5)


def test_mul_scale_mismatch():
    with pytest.raises(ScaleMismatch):
        series_mul(S([1], 1), S([1], 2))


def test_mul_takes_the_smaller_order():
    assert series_mul(S([1, 1], order=3), S([1, 1], order=7)).order == 3


def test_inv_one_minus_power_examples():
    assert inv_one_minus_power(2, 1, 6).coeffs == (1, 0, 1, 0, 1, 0, 1)
    assert inv_one_minus_power(1, 1, 3).coeffs == (1, 1, 1, 1)
    inv = inv_one_minus_power(2, 1, 8)
    assert series_mul(inv, S([1, 0, -1], order=8)) == ScaledSeries.one(order=8)
    with pytest.raises(ValueError):
        inv_one_minus_power(0)


def test_inv_one_minus_power_at_scale():
    s = inv_one_minus_power(1, 3, 2)
    assert s.coeffs == (1, 0, 0, 1, 0, 0, 1)


def test_binom_power_examples():
    assert binom_power(1, 2, 1, 4).coeffs[:3] == (1, 2, 1)
    assert binom_power(3, 0, 1, 4) == ScaledSeries.one(order=4)
    assert binom_power(2, 3, 1, 6).coeffs == (1, 0, 3, 0, 3, 0, 1)


def test_monomial_frac_examples():
    s = monomial_frac(Fraction(1, 2), 2, 3)
    assert s.coeffs.index(1) == 1 and sum(s.coeffs) == 1
    assert monomial_frac(0, 5, 2) == ScaledSeries.one(5, 2)
    with pytest.raises(ScaleError):
        monomial_frac(Fraction(3, 2), 3, 4)
    with pytest.raises(ScaleError):
        monomial_frac(-1, 1, 4)


def test_descale_examples():
    u2 = S([0, 0, 1], scale=2, order=3)
    assert descale(u2).coeffs[:2] == (0, 1) and descale(u2).scale == 1
    assert descale(ScaledSeries.one(4, 3)) == ScaledSeries.one(1, 3)
    with pytest.raises(ScaleError):
        descale(S([0, 1], scale=2, order=3))


def test_truncation_is_uniform():
    s = S(range(100), order=5)
    assert len(s.coeffs) == 6
    assert s[99] == 0
    assert s.truncate(2).coeffs == (0, 1, 2)
    with pytest.raises(ValueError):
        s.truncate(9)


def test_coefficient_reads_fractional_degrees():
    s = S([0, 7, 0, 5], scale=2, order=2)
    assert s.coefficient(Fraction(1, 2)) == 7
    assert s.coefficient(Fraction(3, 2)) == 5
    with pytest.raises(ScaleError):
        s.coefficient(Fraction(1, 3))


pairs = st.lists(st.tuples(st.integers(1, 6), st.integers(0, 4)), max_size=4)


@given(pairs, pairs)
def test_product_expansion_matches_rational_function(num, den):
    # two independent routes: truncated series products vs exact rational function + long division
    direct = series_from_products(num, den, order=25)
    via_rf = rf_to_series(RationalFn.from_products(num, den), 25)
    assert direct == via_rf


@given(st.lists(st.integers(-9, 9), max_size=12), st.lists(st.integers(-9, 9), max_size=12))
def test_mul_matches_naive(a, b):
    got = series_mul(S(a, order=11), S(b, order=11)).coeffs
    want = [0] * 12
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j < 12:
                want[i + j] += x * y
    assert list(got) == want


def test_rational_coefficients_survive():
    s = series_mul(S([Fraction(1, 2)]), S([Fraction(2, 3), 1]))
    assert s.coeffs[:2] == (Fraction(1, 3), Fraction(1, 2))
    assert not s.is_integral()
