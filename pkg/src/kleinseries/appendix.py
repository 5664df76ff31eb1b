"""Hand-transcribed closed forms for ranks 1 to 4, kept as golden oracles.

Each entry is written out term by term in its explicit closed form, so it
shares no code with the engine beyond basic rational-function arithmetic.  The bracket is re-implemented locally for the same reason.

Bracket conventions differ between tables and are followed literally:
  complex P_g(r, d)            brackets in d
  real, n = 0, P(r, 2d)        brackets in the half-degree d
  real, n > 0, P(r, d)         brackets in d
  quaternionic, n > 0, P(r, 2d) brackets in the half-degree d

One commonly quoted exponent is wrong; see ``REAL_N0_R4_ERRATUM``.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor
from typing import Callable

from .ratfunc import RationalFn, rf_add


def _br(x: Fraction) -> Fraction:
    return 1 + floor(x) - x


def _term(coef: int, num: dict, den: dict, expo) -> RationalFn:
    """coef * t**expo * prod (1+t^j)^e / prod (1-t^k)^m."""
    expo = Fraction(expo)
    if expo.denominator != 1:
        raise ArithmeticError(f"non-integral exponent {expo} in a transcribed term")
    return RationalFn.from_products(
        [(j, e) for j, e in num.items()],
        [(k, m) for k, m in den.items()],
        coefficient=coef,
        shift=int(expo),
    )


def _sum(*terms: RationalFn) -> RationalFn:
    total = terms[0]
    for t in terms[1:]:
        total = rf_add(total, t)
    return total


# ---------------------------------------------------------------- complex

def complex_p(g: int, r: int, d: int) -> RationalFn:
    b = lambda x: _br(Fraction(x))  # noqa: E731
    if r == 1:
        return _term(1, {1: 2 * g}, {2: 1}, 0)
    if r == 2:
        return _sum(
            _term(1, {1: 2 * g, 3: 2 * g}, {2: 2, 4: 1}, 0),
            _term(-1, {1: 4 * g}, {2: 2, 4: 1}, 2 * g - 2 + 4 * b(Fraction(d, 2))),
        )
    if r == 3:
        p, m = b(Fraction(d, 3)), b(Fraction(-d, 3))
        return _sum(
            _term(1, {1: 2 * g, 3: 2 * g, 5: 2 * g}, {2: 2, 4: 2, 6: 1}, 0),
            _term(-1, {1: 4 * g, 3: 2 * g}, {2: 3, 4: 1, 6: 1}, 4 * g - 4 + 6 * p),
            _term(-1, {1: 4 * g, 3: 2 * g}, {2: 3, 4: 1, 6: 1}, 4 * g - 4 + 6 * m),
            _term(1, {1: 6 * g}, {2: 3, 4: 2}, 6 * g - 6 + 4 * p + 4 * m),
        )
    if r == 4:
        p, m, h = b(Fraction(d, 4)), b(Fraction(-d, 4)), b(Fraction(d, 2))
        return _sum(
            _term(1, {1: 2 * g, 3: 2 * g, 5: 2 * g, 7: 2 * g}, {2: 2, 4: 2, 6: 2, 8: 1}, 0),
            _term(-1, {1: 4 * g, 3: 2 * g, 5: 2 * g}, {2: 3, 4: 2, 6: 1, 8: 1}, 6 * g - 6 + 8 * p),
            _term(-1, {1: 4 * g, 3: 2 * g, 5: 2 * g}, {2: 3, 4: 2, 6: 1, 8: 1}, 6 * g - 6 + 8 * m),
            _term(-1, {1: 4 * g, 3: 4 * g}, {2: 4, 4: 2, 8: 1}, 8 * g - 8 + 8 * h),
            _term(1, {1: 6 * g, 3: 2 * g}, {2: 4, 4: 2, 6: 1}, 10 * g - 10 + 6 * h + 4 * p),
            _term(1, {1: 6 * g, 3: 2 * g}, {2: 4, 4: 2, 6: 1}, 10 * g - 10 + 6 * h + 4 * m),
            _term(1, {1: 6 * g, 3: 2 * g}, {2: 4, 4: 1, 6: 2}, 10 * g - 10 + 6 * p + 6 * m),
            _term(-1, {1: 8 * g}, {2: 4, 4: 3}, 12 * g - 12 + 4 * h + 4 * p + 4 * m),
        )
    raise ValueError("transcribed only for 1 <= r <= 4")


# ---------------------------------------------------------------- real, n = 0

# The (1,2,1) term of the rank 4 form is often quoted with 12<d/2>; the composition
# sum gives 6<d/4> + 6<-d/4>.  They agree unless d = 2 mod 4.
REAL_N0_R4_ERRATUM = "real n=0 rank 4, (1,2,1) term: 12<d/2> is wrong, correct 6<d/4>+6<-d/4>"


def real_n0_p(g: int, r: int, d: int, *, twelve_half: bool = False) -> RationalFn:
    """P^R_{(g,0,1)}(r, 2d), brackets in the half-degree d."""
    b = lambda x: _br(Fraction(x))  # noqa: E731
    e = g + 1
    if r == 1:
        return _term(1, {1: e}, {2: 1}, 0)
    if r == 2:
        return _sum(
            _term(1, {1: e, 3: e}, {2: 2, 4: 1}, 0),
            _term(-1, {1: 2 * e}, {2: 2, 4: 1}, g - 1 + 4 * b(Fraction(d, 2))),
        )
    if r == 3:
        p, m = b(Fraction(d, 3)), b(Fraction(-d, 3))
        return _sum(
            _term(1, {1: e, 3: e, 5: e}, {2: 2, 4: 2, 6: 1}, 0),
            _term(-1, {1: 2 * e, 3: e}, {2: 3, 4: 1, 6: 1}, 2 * g - 2 + 6 * p),
            _term(-1, {1: 2 * e, 3: e}, {2: 3, 4: 1, 6: 1}, 2 * g - 2 + 6 * m),
            _term(1, {1: 3 * e}, {2: 3, 4: 2}, 3 * g - 3 + 4 * p + 4 * m),
        )
    if r == 4:
        p, m, h = b(Fraction(d, 4)), b(Fraction(-d, 4)), b(Fraction(d, 2))
        middle = 12 * h if twelve_half else 6 * p + 6 * m
        return _sum(
            _term(1, {1: e, 3: e, 5: e, 7: e}, {2: 2, 4: 2, 6: 2, 8: 1}, 0),
            _term(-1, {1: 2 * e, 3: e, 5: e}, {2: 3, 4: 2, 6: 1, 8: 1}, 3 * g - 3 + 8 * p),
            _term(-1, {1: 2 * e, 3: e, 5: e}, {2: 3, 4: 2, 6: 1, 8: 1}, 3 * g - 3 + 8 * m),
            _term(-1, {1: 2 * e, 3: 2 * e}, {2: 4, 4: 2, 8: 1}, 4 * g - 4 + 8 * h),
            _term(1, {1: 3 * e, 3: e}, {2: 4, 4: 2, 6: 1}, 5 * g - 5 + 6 * h + 4 * p),
            _term(1, {1: 3 * e, 3: e}, {2: 4, 4: 2, 6: 1}, 5 * g - 5 + 6 * h + 4 * m),
            _term(1, {1: 3 * e, 3: e}, {2: 4, 4: 1, 6: 2}, 5 * g - 5 + middle),
            _term(-1, {1: 4 * e}, {2: 4, 4: 3}, 6 * g - 6 + 4 * h + 4 * p + 4 * m),
        )
    raise ValueError("transcribed only for 1 <= r <= 4")


# ---------------------------------------------------------------- real, n > 0

def real_np_p(g: int, n: int, r: int, d: int) -> RationalFn:
    """P^R_{(g,n,a)}(r, d) for n > 0 (independent of a)."""
    b = lambda x: _br(Fraction(x))  # noqa: E731
    c1, c2, c3 = 2 ** (n - 1), 2 ** (2 * n - 2), 2 ** (3 * n - 3)
    if r == 1:
        return _term(1, {1: g + 1}, {2: 1}, 0)
    if r == 2:
        return _sum(
            _term(1, {1: g + n + 1, 2: n, 3: g - n + 1}, {2: 2, 4: 1}, 0),
            _term(-c1, {1: 2 * g + 2}, {2: 3}, g - 1 + 2 * b(Fraction(d, 2))),
        )
    if r == 3:
        p, m = b(Fraction(d, 3)), b(Fraction(-d, 3))
        mid = {1: 2 * g + n + 2, 2: n, 3: g - n + 1}
        return _sum(
            _term(1, {1: g + n + 1, 2: 2 * n, 3: g + 1, 5: g - n + 1}, {2: 2, 4: 2, 6: 1}, 0),
            _term(-c1, mid, {2: 3, 3: 1, 4: 1}, 2 * g - 2 + 3 * p),
            _term(-c1, mid, {2: 3, 3: 1, 4: 1}, 2 * g - 2 + 3 * m),
            _term(c2, {1: 3 * g + 3}, {2: 5}, 3 * g - 3 + 2 * p + 2 * m),
        )
    if r == 4:
        p, m, h = b(Fraction(d, 4)), b(Fraction(-d, 4)), b(Fraction(d, 2))
        top = {1: g + n + 1, 2: 2 * n, 3: g + n + 1, 4: n, 5: g - n + 1, 7: g - n + 1}
        a2 = {1: 2 * g + n + 2, 2: 2 * n, 3: g + 1, 5: g - n + 1}
        a3 = {1: 2 * g + 2 * n + 2, 2: 2 * n, 3: 2 * g - 2 * n + 2}
        a4 = {1: 3 * g + n + 3, 2: n, 3: g - n + 1}
        return _sum(
            _term(1, top, {2: 2, 4: 2, 6: 2, 8: 1}, 0),
            _term(-c1, a2, {2: 3, 4: 3, 6: 1}, 3 * g - 3 + 4 * p),
            _term(-c1, a2, {2: 3, 4: 3, 6: 1}, 3 * g - 3 + 4 * m),
            _term(-c1, a3, {2: 4, 4: 3}, 4 * g - 4 + 4 * h),
            _term(c2, a4, {2: 5, 3: 1, 4: 1}, 5 * g - 5 + 3 * h + 2 * p),
            _term(c2, a4, {2: 5, 3: 1, 4: 1}, 5 * g - 5 + 3 * h + 2 * m),
            _term(c2, a4, {2: 4, 3: 2, 4: 1}, 5 * g - 5 + 3 * p + 3 * m),
            _term(-c3, {1: 4 * g + 4}, {2: 7}, 6 * g - 6 + 2 * h + 2 * p + 2 * m),
        )
    raise ValueError("transcribed only for 1 <= r <= 4")


# ---------------------------------------------------------------- quaternionic, n > 0

def quat_np_p(g: int, r: int, d: int) -> RationalFn:
    """P^H_{(g,n,a)}(r, 2d) for n > 0, r in {2, 4}, brackets in the half-degree d."""
    if r == 2:
        return _term(1, {1: g, 3: g}, {4: 1}, 0)
    if r == 4:
        h = _br(Fraction(d, 2))
        return _sum(
            _term(1, {1: g, 3: g, 5: g, 7: g}, {4: 2, 8: 1}, 0),
            _term(-1, {1: 2 * g, 3: 2 * g}, {4: 2, 8: 1}, 4 * g - 4 + 8 * h),
        )
    raise ValueError("transcribed only for r in {2, 4}")


# case id -> (builder, description)
CASES: dict[str, Callable] = {
    "complex": complex_p,
    "real_n0": real_n0_p,
    "real_npos": real_np_p,
    "quat_npos": quat_np_p,
}
