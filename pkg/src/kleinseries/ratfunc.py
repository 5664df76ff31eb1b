"""Exact rational functions in one variable.

A ``RationalFn`` is kept in a canonical form: numerator and denominator are
integer polynomials with no common polynomial factor, the two contents are
coprime, and the denominator's leading coefficient is positive.  Two values are
equal iff their stored coefficient tuples are equal.

The variable is u with t = u**scale; for scale 1 it is t itself.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable

from . import _zpoly as Z
from .exact import BigRat, Poly, rat
from .series import DEFAULT_ORDER, ScaledSeries, ScaleError, ScaleMismatch


class PoleError(ValueError):
    pass


def _normalize(num: tuple, den: tuple) -> tuple[tuple, tuple]:
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return (), (1,)
    h, num, den = Z.gcd_cofactors(num, den)
    cn = Z.content(num)
    cd, den = Z.primitive(den)
    g = gcd(cn, cd)
    if cd < 0:
        g = -g
    if g != 1:
        num = tuple(x // g for x in num)
    cd //= g
    if cd != 1:
        den = Z.scale(den, cd)
    return num, den


def _as_ints(p) -> tuple[tuple, int]:
    """Integer tuple and the denominator it was scaled by."""
    if isinstance(p, Poly):
        coeffs = p.coeffs
    else:
        coeffs = tuple(rat(c) for c in p)
    den = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    if den == 1:
        return Z.strip(coeffs), 1
    return Z.strip(int(c * den) for c in coeffs), den


class RationalFn:
    __slots__ = ("num", "den", "scale")

    def __init__(self, num, den=(1,), scale: int = 1, *, _normalized: bool = False):
        if scale < 1:
            raise ValueError("scale must be a positive integer")
        if _normalized:
            n, d = num, den
        else:
            n, dn = _as_ints(num)
            d, dd = _as_ints(den)
            if not d:
                raise ZeroDivisionError("zero denominator")
            # num/dn over den/dd
            n, d = Z.scale(n, dd), Z.scale(d, dn)
            n, d = _normalize(n, d)
        self.num: tuple = n
        self.den: tuple = d
        self.scale = scale

    # -- constructors

    @classmethod
    def constant(cls, c, scale: int = 1) -> "RationalFn":
        return cls((rat(c),), (1,), scale)

    @classmethod
    def monomial(cls, k: int, c=1, scale: int = 1) -> "RationalFn":
        """c * u**k for any integer k (negative k goes to the denominator)."""
        if k >= 0:
            return cls((0,) * k + (rat(c),), (1,), scale)
        return cls((rat(c),), (0,) * (-k) + (1,), scale)

    @classmethod
    def from_products(
        cls,
        numerator: Iterable[tuple[int, int]] = (),
        denominator: Iterable[tuple[int, int]] = (),
        coefficient: int = 1,
        shift: int = 0,
        scale: int = 1,
    ) -> "RationalFn":
        """coefficient * u**shift * prod (1+u^j)^e / prod (1-u^k)^m.

        Cancellation happens on cyclotomic exponents, so no gcd is needed.
        """
        return rf_cyclotomic_sum([(coefficient, shift, cyclotomic_exponents(numerator, denominator))], scale)

    # -- views

    @property
    def num_poly(self) -> Poly:
        return Poly._from_ints(self.num, "t" if self.scale == 1 else "u")

    @property
    def den_poly(self) -> Poly:
        return Poly._from_ints(self.den, "t" if self.scale == 1 else "u")

    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalFn.constant(other, self.scale)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.scale == other.scale and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den, self.scale))

    def __repr__(self) -> str:
        return f"RationalFn(num={list(self.num)}, den={list(self.den)}, scale={self.scale})"

    def __str__(self) -> str:
        v = "t" if self.scale == 1 else "u"
        n = str(Poly._from_ints(self.num, v))
        if self.den == (1,):
            return n
        return f"({n})/({Poly._from_ints(self.den, v)})"

    def __call__(self, x) -> BigRat:
        d = Z.evaluate(self.den, x)
        if d == 0:
            raise PoleError(f"pole at {x}")
        return rat(Fraction(Z.evaluate(self.num, x)) / d)

    # -- arithmetic

    def _check(self, other: "RationalFn") -> None:
        if self.scale != other.scale:
            raise ScaleMismatch(f"scales differ: {self.scale} vs {other.scale}")

    def _coerce(self, other) -> "RationalFn":
        if isinstance(other, RationalFn):
            self._check(other)
            return other
        if isinstance(other, Poly):
            return RationalFn(other, (1,), self.scale)
        return RationalFn.constant(other, self.scale)

    def __add__(self, other) -> "RationalFn":
        return rf_add(self, self._coerce(other))

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn(Z.neg(self.num), self.den, self.scale, _normalized=True)

    def __sub__(self, other) -> "RationalFn":
        return rf_add(self, -self._coerce(other))

    def __rsub__(self, other) -> "RationalFn":
        return rf_add(-self, self._coerce(other))

    def __mul__(self, other) -> "RationalFn":
        return rf_mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFn":
        return rf_div(self, self._coerce(other))

    def __rtruediv__(self, other) -> "RationalFn":
        return rf_div(self._coerce(other), self)

    def __pow__(self, e: int) -> "RationalFn":
        if e < 0:
            return RationalFn(Z.power(self.den, -e), Z.power(self.num, -e), self.scale)
        return RationalFn(Z.power(self.num, e), Z.power(self.den, e), self.scale, _normalized=True)


def rf_add(a: RationalFn, b: RationalFn) -> RationalFn:
    a._check(b)
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.den == b.den:
        return RationalFn(Z.add(a.num, b.num), a.den, a.scale)
    # combine over lcm(a.den, b.den)
    _, ca, cb = Z.gcd_cofactors(a.den, b.den)
    num = Z.add(Z.mul(a.num, cb), Z.mul(b.num, ca))
    den = Z.mul(a.den, cb)
    return RationalFn(num, den, a.scale)


def rf_mul(a: RationalFn, b: RationalFn) -> RationalFn:
    a._check(b)
    if a.is_zero() or b.is_zero():
        return RationalFn((), (1,), a.scale, _normalized=True)
    # cross-cancel first so the final gcd works on smaller inputs
    _, n1, d2 = Z.gcd_cofactors(a.num, b.den)
    _, n2, d1 = Z.gcd_cofactors(b.num, a.den)
    return RationalFn(Z.mul(n1, n2), Z.mul(d1, d2), a.scale)


def rf_div(a: RationalFn, b: RationalFn) -> RationalFn:
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero rational function")
    return rf_mul(a, RationalFn(b.den, b.num, b.scale))


# ---------------------------------------------------------------- cyclotomic form
#
# (1 - u^k) = prod_{m | k} phi_m and (1 + u^j) = prod_{m | 2j, m not | j} phi_m,
# with phi_1 = 1 - u (not u - 1) so that no signs need tracking.

def _divisors(k: int) -> list[int]:
    small = [m for m in range(1, int(k ** 0.5) + 1) if k % m == 0]
    return sorted(set(small + [k // m for m in small]))


def _phi(m: int) -> tuple:
    return (1, -1) if m == 1 else Z.cyclotomic(m)


def cyclotomic_exponents(numerator: Iterable[tuple[int, int]],
                         denominator: Iterable[tuple[int, int]]) -> dict[int, int]:
    """Exponent of each phi_m in prod (1+u^j)^e / prod (1-u^k)^m (negative = denominator)."""
    exps: dict[int, int] = {}
    for j, e in numerator:
        if j < 1 or e < 0:
            raise ValueError("numerator factors need j >= 1 and e >= 0")
        for m in _divisors(2 * j):
            if j % m:
                exps[m] = exps.get(m, 0) + e
    for k, mult in denominator:
        if k < 1 or mult < 0:
            raise ValueError("denominator factors need k >= 1 and m >= 0")
        for m in _divisors(k):
            exps[m] = exps.get(m, 0) - mult
    return {m: e for m, e in exps.items() if e}


def _phi_product(exps: dict[int, int]) -> tuple:
    return Z.product([Z.power(_phi(m), e) for m, e in sorted(exps.items()) if e > 0])


def rf_cyclotomic_sum(terms: Iterable[tuple[int, int, dict]], scale: int = 1) -> RationalFn:
    """Sum of c * u**s * prod phi_m**a_m over terms (c, s, {m: a_m}).

    Everything is brought over the least common cyclotomic denominator, and
    the denominator's known irreducible factors are then removed from the sum
    by exact division, so the result is canonical without any gcd.
    """
    terms = [(c, s, e) for c, s, e in terms if c]
    if not terms:
        return RationalFn((), (1,), scale, _normalized=True)
    den_exps: dict[int, int] = {}
    for _, _, e in terms:
        for m, a in e.items():
            if a < 0:
                den_exps[m] = max(den_exps.get(m, 0), -a)
    low = min(s for _, s, _ in terms)
    num: tuple = ()
    for c, s, e in terms:
        lift = {m: e.get(m, 0) + den_exps.get(m, 0) for m in set(e) | set(den_exps)}
        num = Z.add(num, Z.scale(Z.shift(_phi_product(lift), s - low), c))
    tpow = max(0, -low)
    if low > 0:
        num = Z.shift(num, low)
    if not num:
        return RationalFn((), (1,), scale, _normalized=True)
    while tpow and num[0] == 0:
        num = num[1:]
        tpow -= 1
    for m in sorted(den_exps):
        while den_exps[m]:
            q = Z.divexact(num, _phi(m))
            if q is None:
                break
            num = q
            den_exps[m] -= 1
    den = Z.shift(_phi_product(den_exps), tpow)
    if den[-1] < 0:
        num, den = Z.neg(num), Z.neg(den)
    return RationalFn(num, den, scale, _normalized=True)


def rf_sum(terms: Iterable[RationalFn], scale: int = 1) -> RationalFn:
    """Sum many terms, normalizing after each addition."""
    acc = RationalFn((), (1,), scale, _normalized=True)
    for t in terms:
        acc = rf_add(acc, t)
    return acc


def rf_to_series(f: RationalFn, order: int = DEFAULT_ORDER) -> ScaledSeries:
    """Power-series expansion of f up to t-degree ``order``."""
    if f.den[0] == 0:
        raise PoleError("the denominator vanishes at the origin")
    n = order * f.scale + 1
    num = list(f.num[:n]) + [0] * max(0, n - len(f.num))
    den = f.den
    d0 = den[0]
    out = []
    exact_int = True
    for k in range(n):
        acc = num[k]
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        if exact_int and isinstance(acc, int) and acc % d0 == 0:
            out.append(acc // d0)
        else:
            exact_int = False
            out.append(rat(Fraction(acc) / d0))
    return ScaledSeries(tuple(out), f.scale, order)


def rf_reciprocal(f: RationalFn) -> tuple[RationalFn, int]:
    """Return (g, e) with f(1/u) == u**e * g(u), g free of monomial factors."""
    if f.is_zero():
        raise ZeroDivisionError("reciprocal substitution of the zero function")
    vn = next(i for i, c in enumerate(f.num) if c)
    vd = next(i for i, c in enumerate(f.den) if c)
    n = f.num[vn:]
    d = f.den[vd:]
    e = (vd - vn) + (len(d) - 1) - (len(n) - 1)
    return RationalFn(n[::-1], d[::-1], f.scale), e


def duality_check(f: RationalFn, D: int) -> bool:
    """True iff t**D * f(1/t) == f(t) exactly (D in t-degrees)."""
    if f.is_zero():
        raise ValueError("duality check of the zero function")
    g, e = rf_reciprocal(f)
    total = D * f.scale + e
    if total >= 0:
        lhs_num, lhs_den = Z.shift(g.num, total), g.den
    else:
        lhs_num, lhs_den = g.num, Z.shift(g.den, -total)
    return Z.mul(lhs_num, f.den) == Z.mul(f.num, lhs_den)


def limit_at_one(f: RationalFn) -> BigRat:
    """Exact limit as t -> 1, cancelling common (1 - t) factors by synthetic division."""
    num, den = f.num, f.den
    if not num:
        return 0
    while Z.evaluate(den, 1) == 0:
        if Z.evaluate(num, 1) != 0:
            raise PoleError("genuine pole at t = 1")
        num = Z.div_one_minus_x(num)
        den = Z.div_one_minus_x(den)
    return rat(Fraction(Z.evaluate(num, 1), Z.evaluate(den, 1)))


def rf_is_polynomial(f: RationalFn) -> Poly | None:
    """The polynomial equal to f, or None when f has a nontrivial denominator."""
    if len(f.den) != 1:
        return None
    var = "t" if f.scale == 1 else "u"
    d = f.den[0]
    return Poly([Fraction(c, d) for c in f.num], var)


def rf_descale(f: RationalFn) -> RationalFn:
    """Rewrite a function of u = t**(1/L) that only involves u**L as a function of t."""
    L = f.scale
    if L == 1:
        return f
    for part in (f.num, f.den):
        for k, c in enumerate(part):
            if c and k % L:
                raise ScaleError(f"u^{k} is not a power of t at scale {L}")
    return RationalFn(f.num[::L], f.den[::L], 1, _normalized=True)


def rf_substitute_power(f: RationalFn, k: int) -> RationalFn:
    """f(t**k) (keeps the canonical form: substitution preserves coprimality)."""
    def up(p):
        if not p:
            return p
        out = [0] * ((len(p) - 1) * k + 1)
        out[::k] = p
        return tuple(out)
    return RationalFn(up(f.num), up(f.den), f.scale, _normalized=True)
