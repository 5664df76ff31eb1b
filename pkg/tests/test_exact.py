from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from kleinseries import Poly, VariableMismatch, format_rat, poly_add, poly_divrem, poly_gcd, poly_mul, rat

t = sympy.Symbol("t")

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=12)
polys = st.lists(fracs, max_size=7).map(Poly)
nonzero = polys.filter(lambda p: not p.is_zero())


def sym(p: Poly):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in map(Fraction, reversed(p.coeffs))] or [0], t, domain="QQ")


def test_rat_collapses_integral_fractions():
    assert type(rat(Fraction(6, 3))) is int
    assert rat("3/6") == Fraction(1, 2)
    assert format_rat(Fraction(-2, 4)) == "-1/2"
    assert format_rat(Fraction(4, 2)) == "2"
    with pytest.raises(TypeError):
        rat(0.5)


def test_add_examples():
    one_t = Poly([1, 1])
    assert poly_add(one_t, Poly([])) == one_t
    assert poly_add(one_t, Poly([-1, -1])).is_zero()
    assert poly_add(one_t, Poly([1, -1])) == Poly([2])


def test_mul_examples():
    assert poly_mul(Poly([1, 1]), Poly([1, -1])) == Poly([1, 0, -1])
    p = Poly([Fraction(1, 3), 0, 5])
    assert poly_mul(p, Poly([1])) == p
    assert Poly([1, 1]) ** 2 == Poly([1, 2, 1])


def test_divrem_examples():
    assert poly_divrem(Poly([1, 0, -1]), Poly([1, -1])) == (Poly([1, 1]), Poly([]))
    assert poly_divrem(Poly([0, 1]), Poly([1, 1])) == (Poly([1]), Poly([-1]))
    assert poly_divrem(Poly([]), Poly([3, 1])) == (Poly([]), Poly([]))
    with pytest.raises(ZeroDivisionError):
        poly_divrem(Poly([1]), Poly([]))


def test_gcd_examples():
    assert poly_gcd(Poly([1, 0, -1]), Poly([1, -1])) == Poly([-1, 1])  # monic: t - 1
    p = Poly([2, 4, 6])
    assert poly_gcd(p, Poly([])) == p.monic()
    assert poly_gcd(Poly([1, 1]), Poly([1, -1])) == Poly([1])
    with pytest.raises(ValueError):
        poly_gcd(Poly([]), Poly([]))


def test_variable_tags_do_not_mix():
    with pytest.raises(VariableMismatch):
        poly_add(Poly([1], "t"), Poly([1], "u"))
    with pytest.raises(VariableMismatch):
        poly_mul(Poly([1], "t"), Poly([1], "u"))
    with pytest.raises(ValueError):
        Poly([1], "x")


def test_degree_and_trailing_zeros():
    p = Poly([1, 2, 0, 0])
    assert p.degree == 1 and p.coeffs == (1, 2)
    assert Poly([]).degree == -1


@given(polys, polys)
def test_ring_ops_match_sympy(a, b):
    assert sym(a + b) == sym(a) + sym(b)
    assert sym(a * b) == sym(a) * sym(b)


@given(polys, nonzero)
def test_divrem_identity(a, b):
    q, r = poly_divrem(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(nonzero, nonzero)
def test_gcd_matches_sympy(a, b):
    got = poly_gcd(a, b)
    want = sympy.gcd(sym(a), sym(b)).monic().set_domain("QQ")
    assert sym(got) == want
    assert got.lead == 1


def test_evaluation_and_helpers():
    p = Poly([1, Fraction(1, 2), 3])
    assert p(2) == 1 + 1 + 12
    assert p(Fraction(1, 2)) == Fraction(1) + Fraction(1, 4) + Fraction(3, 4)
    assert Poly([0, 0, 1, 2]).valuation() == 2
    assert Poly([1, 2, 3]).reversed() == Poly([3, 2, 1])
    assert Poly([1, 2]).shift(2) == Poly([0, 0, 1, 2])
    assert str(Poly([1, -1, 0, 2])) == "1 - t + 2*t^3"
