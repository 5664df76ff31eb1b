"""Truncated power series in t, stored in a scaled variable u with t = u**L.

A series of order N holds the coefficients of u**0 .. u**(N*L), i.e. all
t-degrees up to and including N.  Nothing beyond that is ever stored, and
nothing stored below it is approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _zpoly as Z
from .exact import BigRat, Poly, rat

DEFAULT_ORDER = 40


class ScaleMismatch(ValueError):
    pass


class ScaleError(ValueError):
    """An exponent is not representable at the chosen scale."""


@dataclass(frozen=True)
class ScaledSeries:
    coeffs: tuple
    scale: int = 1
    order: int = DEFAULT_ORDER

    def __post_init__(self):
        if self.scale < 1:
            raise ValueError("scale must be a positive integer")
        if self.order < 0:
            raise ValueError("order must be non-negative")
        n = self.order * self.scale + 1
        c = [rat(x) for x in self.coeffs[:n]]
        c.extend([0] * (n - len(c)))
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_poly(cls, p: Poly | Sequence, scale: int = 1, order: int = DEFAULT_ORDER) -> "ScaledSeries":
        coeffs = p.coeffs if isinstance(p, Poly) else tuple(p)
        return cls(coeffs, scale, order)

    @classmethod
    def one(cls, scale: int = 1, order: int = DEFAULT_ORDER) -> "ScaledSeries":
        return cls((1,), scale, order)

    def __getitem__(self, k: int) -> BigRat:
        """Coefficient of u**k (zero above the truncation)."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def coefficient(self, tdeg) -> BigRat:
        """Coefficient of t**tdeg, tdeg possibly fractional."""
        k = Fraction(tdeg) * self.scale
        if k.denominator != 1:
            raise ScaleError(f"t^{tdeg} is not representable at scale {self.scale}")
        return self[int(k)]

    def t_coefficients(self) -> list:
        """Coefficients of t**0 .. t**order; requires an integral series."""
        return list(descale(self).coeffs)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def truncate(self, order: int) -> "ScaledSeries":
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return ScaledSeries(self.coeffs, self.scale, order)

    def _check(self, other: "ScaledSeries") -> None:
        if self.scale != other.scale:
            raise ScaleMismatch(f"scales differ: {self.scale} vs {other.scale}")

    def __add__(self, other: "ScaledSeries") -> "ScaledSeries":
        self._check(other)
        order = min(self.order, other.order)
        n = order * self.scale + 1
        return ScaledSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n)), self.scale, order)

    def __neg__(self) -> "ScaledSeries":
        return ScaledSeries(tuple(-c for c in self.coeffs), self.scale, self.order)

    def __sub__(self, other: "ScaledSeries") -> "ScaledSeries":
        return self + (-other)

    def __mul__(self, other) -> "ScaledSeries":
        if isinstance(other, ScaledSeries):
            return series_mul(self, other)
        c = rat(other)
        return ScaledSeries(tuple(c * x for x in self.coeffs), self.scale, self.order)

    __rmul__ = __mul__

    def shift(self, tdeg) -> "ScaledSeries":
        """Multiply by t**tdeg (tdeg >= 0, representable at this scale)."""
        return series_mul(self, monomial_frac(tdeg, self.scale, self.order))


def series_mul(a: ScaledSeries, b: ScaledSeries) -> ScaledSeries:
    """Truncated product; the result has the smaller of the two orders."""
    a._check(b)
    order = min(a.order, b.order)
    n = order * a.scale + 1
    x = Z.strip(a.coeffs[:n])
    y = Z.strip(b.coeffs[:n])
    if a.is_integral() and b.is_integral():
        prod = Z.mul(x, y)
    else:
        prod = _mul_rational(x, y)
    return ScaledSeries(prod[:n], a.scale, order)


def _mul_rational(x, y):
    out = [0] * max(len(x) + len(y) - 1, 0)
    for i, p in enumerate(x):
        if p:
            for j, q in enumerate(y):
                out[i + j] += p * q
    return out


def inv_one_minus_power(k: int, scale: int = 1, order: int = DEFAULT_ORDER) -> ScaledSeries:
    """1/(1 - t**k) = 1 + t**k + t**2k + ... truncated at t-order ``order``."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    step = k * scale
    n = order * scale + 1
    c = [0] * n
    for i in range(0, n, step):
        c[i] = 1
    return ScaledSeries(tuple(c), scale, order)


def binom_power(j: int, e: int, scale: int = 1, order: int = DEFAULT_ORDER) -> ScaledSeries:
    """(1 + t**j)**e truncated, by repeated squaring."""
    if j < 1:
        raise ValueError("j must be a positive integer")
    if e < 0:
        raise ValueError("e must be non-negative")
    base = ScaledSeries.from_poly(Z.one_plus_power(j * scale), scale, order)
    result = ScaledSeries.one(scale, order)
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def monomial_frac(c, scale: int = 1, order: int = DEFAULT_ORDER) -> ScaledSeries:
    """The single monomial t**c, placed at u-exponent c*scale."""
    k = Fraction(c) * scale
    if k.denominator != 1 or k < 0:
        raise ScaleError(f"t^{c} needs a non-negative integral u-exponent at scale {scale}, got {k}")
    k = int(k)
    coeffs = [0] * (order * scale + 1)
    if k < len(coeffs):
        coeffs[k] = 1
    return ScaledSeries(tuple(coeffs), scale, order)


def descale(s: ScaledSeries) -> ScaledSeries:
    """Re-index a series that only uses u-exponents divisible by its scale."""
    L = s.scale
    if L == 1:
        return s
    for k, c in enumerate(s.coeffs):
        if c != 0 and k % L:
            raise ScaleError(f"nonzero coefficient at u^{k}, not a multiple of the scale {L}")
    return ScaledSeries(s.coeffs[::L], 1, s.order)


def series_from_products(
    numerator: Iterable[tuple[int, int]],
    denominator: Iterable[tuple[int, int]],
    scale: int = 1,
    order: int = DEFAULT_ORDER,
) -> ScaledSeries:
    """Expand prod (1+t^j)^e over prod (1-t^k)^m, both given as (power, exponent) pairs."""
    s = ScaledSeries.one(scale, order)
    for j, e in numerator:
        if e:
            s = series_mul(s, binom_power(j, e, scale, order))
    for k, m in denominator:
        inv = inv_one_minus_power(k, scale, order)
        for _ in range(m):
            s = series_mul(s, inv)
    return s
