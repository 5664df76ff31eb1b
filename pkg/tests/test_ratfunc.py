import random
from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given, strategies as st

from kleinseries import (
    PoleError,
    Poly,
    RationalFn,
    ScaleMismatch,
    duality_check,
    limit_at_one,
    rf_add,
    rf_div,
    rf_is_polynomial,
    rf_mul,
    rf_reciprocal,
    rf_to_series,
)
from kleinseries import _zpoly as Z
from kleinseries.ratfunc import cyclotomic_exponents, rf_cyclotomic_sum, rf_descale, rf_substitute_power

t = sympy.Symbol("t")
ints = st.lists(st.integers(-7, 7), min_size=1, max_size=6)
rfs = st.tuples(ints, ints.filter(lambda d: any(d))).map(lambda nd: RationalFn(nd[0], nd[1]))
nonzero_rfs = rfs.filter(lambda f: not f.is_zero())


def to_sympy(f: RationalFn):
    n = sum(c * t**k for k, c in enumerate(f.num))
    d = sum(c * t**k for k, c in enumerate(f.den))
    return n / d


def assert_canonical(f: RationalFn):
    assert f.den and f.den[-1] > 0
    if f.num:
        assert gcd(Z.content(f.num), Z.content(f.den)) == 1
        g = sympy.gcd(sympy.Poly(list(reversed(f.num)), t), sympy.Poly(list(reversed(f.den)), t))
        assert g.degree() == 0
    else:
        assert f.den == (1,)


def test_add_examples():
    a = RationalFn((1, 2), (3, 0, 1))
    assert a + 0 == a
    assert rf_add(RationalFn((1,), (1, -1)), RationalFn((1,), (1, 1))) == RationalFn((2,), (1, 0, -1))


def test_mul_div_examples():
    a = RationalFn((1, 2), (3, 0, 1))
    assert rf_mul(a, RationalFn(a.den, a.num)) == RationalFn((1,))
    assert rf_div(a, a) == 1
    with pytest.raises(ZeroDivisionError):
        rf_div(a, RationalFn(()))


def test_scale_mismatch():
    with pytest.raises(ScaleMismatch):
        RationalFn((1,), scale=1) + RationalFn((1,), scale=2)


@given(rfs)
def test_canonical_form(f):
    assert_canonical(f)


@given(rfs, rfs)
def test_field_ops_match_sympy(a, b):
    assert_canonical(a + b)
    assert_canonical(a * b)
    assert sympy.simplify(to_sympy(a + b) - (to_sympy(a) + to_sympy(b))) == 0
    assert sympy.simplify(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@given(rfs, nonzero_rfs)
def test_division_inverts_multiplication(a, b):
    assert (a * b) / b == a
    assert (a - b) + b == a


def test_equality_is_canonical():
    # same function, different presentations
    assert RationalFn((2, 2), (4, 0, -4)) == RationalFn((1,), (2, -2))
    assert RationalFn((-1,), (-1, 1)) == RationalFn((1,), (1, -1))
    assert RationalFn((Fraction(1, 2),), (1,)) == RationalFn((1,), (2,))


def test_to_series_examples():
    assert rf_to_series(RationalFn((1,), (1, -1)), 3).coeffs == (1, 1, 1, 1)
    assert rf_to_series(RationalFn((1, 1)), 3).coeffs == (1, 1, 0, 0)
    f = RationalFn.from_products([(1, 4)], [(2, 2)])
    assert rf_to_series(f, 2).coeffs == (1, 4, 8)
    with pytest.raises(PoleError):
        rf_to_series(RationalFn((1,), (0, 1)), 3)


def test_to_series_rational_coefficients():
    s = rf_to_series(RationalFn((1,), (2, -1)), 3)
    assert s.coeffs == (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8), Fraction(1, 16))


def test_reciprocal_examples():
    g, e = rf_reciprocal(RationalFn((1,), (1, -1)))
    assert (g, e) == (RationalFn((1,), (-1, 1)), 1)
    assert rf_reciprocal(RationalFn((0, 0, 1))) == (RationalFn((1,)), -2)
    g, e = rf_reciprocal(RationalFn((1, 1), (1, -1)))
    assert e == 0 and g == RationalFn((1, 1), (-1, 1))


@given(nonzero_rfs)
def test_reciprocal_at_random_points(f):
    g, e = rf_reciprocal(f)
    rng = random.Random(7)
    for _ in range(5):
        x = Fraction(rng.randint(2, 40), rng.randint(1, 40))
        try:
            lhs = f(1 / x)
            rhs = x ** e * g(x)
        except PoleError:
            continue
        assert lhs == rhs


def test_duality_examples():
    assert duality_check(RationalFn((1, 1)), 1)
    assert not duality_check(RationalFn((1, 0, 1)), 1)
    f = RationalFn.from_products([(1, 1), (3, 2)], []) / RationalFn((1, 0, 1))
    assert duality_check(f, 5)
    assert rf_to_series(f, 3).coeffs == (1, 1, -1, 1)


def test_limit_examples():
    assert limit_at_one(RationalFn((1, 0, -1), (1, -1))) == 2
    assert limit_at_one(RationalFn((1, -2, 1), (1, -1))) == 0
    assert limit_at_one(RationalFn((1, -1, -1, 1), (1, -2, 1))) == 2
    with pytest.raises(PoleError):
        limit_at_one(RationalFn((1,), (1, -1)))


def test_is_polynomial_examples():
    assert rf_is_polynomial(RationalFn((1, 0, -1), (1, -1))) == Poly([1, 1])
    assert rf_is_polynomial(RationalFn((1,), (1, -1))) is None
    assert rf_is_polynomial(RationalFn((1, 3), (2,))) == Poly([Fraction(1, 2), Fraction(3, 2)])


def test_descale_and_substitute():
    f = RationalFn((1, 0, 1), (1, 0, 0, 0, -1), scale=2)
    assert rf_descale(f) == RationalFn((1, 1), (1, 0, -1))
    assert rf_substitute_power(RationalFn((1, 1), (1, -1)), 3) == RationalFn((1, 0, 0, 1), (1, 0, 0, -1))


def test_monomial_negative_power():
    assert RationalFn.monomial(-2, 3) * RationalFn.monomial(2) == 3


factor_pairs = st.lists(st.tuples(st.integers(1, 8), st.integers(0, 3)), max_size=4)


@given(factor_pairs, factor_pairs, st.integers(-3, 3), st.integers(-4, 4).filter(bool))
def test_from_products_matches_generic_construction(num, den, shift, c):
    top = Z.product([Z.power(Z.one_plus_power(j), e) for j, e in num])
    bot = Z.product([Z.power(Z.one_minus_power(k), m) for k, m in den])
    want = RationalFn(Z.scale(top, c), bot) * RationalFn.monomial(shift)
    got = RationalFn.from_products(num, den, coefficient=c, shift=shift)
    assert got == want
    assert_canonical(got)


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-2, 4), factor_pairs, factor_pairs), min_size=1, max_size=4))
def test_cyclotomic_sum_matches_pairwise_gcd_sum(terms):
    # cross-route: one common cyclotomic denominator vs repeated gcd-normalized addition
    packed = [(c, s, cyclotomic_exponents(n, d)) for c, s, n, d in terms]
    fast = rf_cyclotomic_sum(packed)
    slow = RationalFn(())
    for c, s, n, d in terms:
        slow = rf_add(slow, RationalFn.from_products(n, d, coefficient=c, shift=s))
    assert fast == slow
    assert_canonical(fast)


def test_cyclotomic_exponents_of_simple_factors():
    # (1+t^2)/(1-t^4) = 1/(1-t^2) = 1/(phi_1 phi_2)
    assert cyclotomic_exponents([(2, 1)], [(4, 1)]) == {1: -1, 2: -1}
