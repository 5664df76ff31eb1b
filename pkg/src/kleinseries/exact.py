"""Exact univariate polynomials over the rationals.

Coefficients are Python ``int`` or ``fractions.Fraction`` values (a Fraction
with denominator 1 is always stored as an ``int``), so every value is a
normalized rational by construction.  Each polynomial carries a variable tag,
``"t"`` or ``"u"``; mixing tags is an error.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Union

from . import _zpoly as Z

BigRat = Union[int, Fraction]

VARIABLES = ("t", "u")


class VariableMismatch(ValueError):
    pass


def rat(x) -> BigRat:
    """Coerce to an exact rational, collapsing integral Fractions to int."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return rat(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return rat(Fraction(x))
    raise TypeError(f"not an exact rational: {x!r}")


def format_rat(x: BigRat) -> str:
    x = rat(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def _common_denominator(coeffs) -> int:
    den = 1
    for c in coeffs:
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    return den


class Poly:
    """Dense polynomial, coefficient of ``var**k`` at index ``k``."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "t"):
        if var not in VARIABLES:
            raise ValueError(f"unknown variable tag {var!r}")
        c = [rat(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple = tuple(c)
        self.var = var

    @classmethod
    def _from_ints(cls, coeffs: tuple, var: str) -> "Poly":
        # trusted constructor: coeffs already a stripped tuple of ints
        p = object.__new__(cls)
        p.coeffs = coeffs
        p.var = var
        return p

    @classmethod
    def monomial(cls, k: int, c=1, var: str = "t") -> "Poly":
        return cls([0] * k + [c], var)

    @classmethod
    def constant(cls, c, var: str = "t") -> "Poly":
        return cls([c], var)

    # -- basic queries

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> BigRat:
        return self.coeffs[-1] if self.coeffs else 0

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __call__(self, x) -> BigRat:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return rat(acc) if isinstance(acc, (int, Fraction)) else acc

    def __getitem__(self, k: int) -> BigRat:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.var == other.var and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other], self.var).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.var, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                cs = format_rat(c)
                terms.append(cs + ("*" + mono if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")

    # -- integer views

    def to_primitive(self) -> tuple[BigRat, tuple]:
        """Return (c, q) with self == c * q, q a primitive integer tuple."""
        den = _common_denominator(self.coeffs)
        ints = tuple(int(c * den) for c in self.coeffs) if den != 1 else self.coeffs
        cont, prim = Z.primitive(ints)
        return rat(Fraction(cont, den)), prim

    def _scaled_ints(self) -> tuple[tuple, int]:
        den = _common_denominator(self.coeffs)
        if den == 1:
            return self.coeffs, 1
        return tuple(int(c * den) for c in self.coeffs), den

    def _check(self, other: "Poly") -> None:
        if self.var != other.var:
            raise VariableMismatch(f"variable tags differ: {self.var!r} vs {other.var!r}")

    # -- arithmetic

    def __neg__(self) -> "Poly":
        return Poly._from_ints(tuple(-c for c in self.coeffs), self.var) if self.is_integral() \
            else Poly([-c for c in self.coeffs], self.var)

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly([other], self.var)
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly([other], self.var)
        return poly_add(self, -other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = rat(other)
            return Poly([c * other for c in self.coeffs], self.var)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        ints, den = self._scaled_ints()
        out = Z.power(ints, e)
        if den == 1:
            return Poly._from_ints(out, self.var)
        return Poly([Fraction(c, den ** e) for c in out], self.var)

    def __divmod__(self, other: "Poly"):
        return poly_divrem(self, other)

    def shift(self, k: int) -> "Poly":
        """Multiply by var**k."""
        if k < 0:
            raise ValueError("negative shift")
        return Poly._from_ints(Z.shift(self.coeffs, k), self.var) if self.is_integral() \
            else Poly((0,) * k + self.coeffs, self.var)

    def reversed(self) -> "Poly":
        """Coefficient reversal: var**deg * self(1/var)."""
        return Poly(self.coeffs[::-1], self.var)

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lc = self.lead
        return Poly([Fraction(c) / lc for c in self.coeffs], self.var)

    def valuation(self) -> int:
        """Largest k with var**k dividing self (0 for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return 0


def poly_add(a: Poly, b: Poly) -> Poly:
    a._check(b)
    if a.is_integral() and b.is_integral():
        return Poly._from_ints(Z.add(a.coeffs, b.coeffs), a.var)
    n = max(len(a), len(b))
    return Poly([a[k] + b[k] for k in range(n)], a.var)


def poly_mul(a: Poly, b: Poly) -> Poly:
    a._check(b)
    ia, da = a._scaled_ints()
    ib, db = b._scaled_ints()
    out = Z.mul(ia, ib)
    if da == 1 and db == 1:
        return Poly._from_ints(out, a.var)
    den = da * db
    return Poly([Fraction(c, den) for c in out], a.var)


def poly_divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder over Q: a == q*b + r with deg r < deg b."""
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_integral() and b.is_integral():
        q = Z.divexact(a.coeffs, b.coeffs)
        if q is not None:
            return Poly._from_ints(q, a.var), Poly((), a.var)
    q, r = Z.divrem_rational(a.coeffs, b.coeffs)
    return Poly(q, a.var), Poly(r, a.var)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor over Q."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if b.is_zero():
        return a.monic()
    if a.is_zero():
        return b.monic()
    _, pa = a.to_primitive()
    _, pb = b.to_primitive()
    h, _, _ = Z.gcd_cofactors(pa, pb)
    return Poly._from_ints(h, a.var).monic()
