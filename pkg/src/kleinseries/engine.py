"""Equivariant Poincare series: product formulas, HN recursion, closed formulas.

Notation follows the usual conventions: Q is the series of the classifying
space of the gauge group, f the series of the holonomy space, and P the
equivariant series of the semistable stratum.  The complex case uses rational
coefficients and t**(2 d_mu); the real and quaternionic cases are mod 2 series
and use t**d_mu.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, gcd
from typing import Callable, Optional

from .exact import Poly
from .hn import (
    BundleType,
    InvalidType,
    KleinTopType,
    Tau,
    bundle_violations,
    codim_dmu,
    compositions,
    enumerate_hn_types,
    pair_sum,
    real_multiplicity,
    tau_admissible,
    zagier_exponent_M,
)
from .ratfunc import RationalFn, cyclotomic_exponents, rf_cyclotomic_sum, rf_is_polynomial
from .series import (
    DEFAULT_ORDER,
    ScaledSeries,
    ScaleError,
    descale,
    monomial_frac,
    series_from_products,
    series_mul,
)

Factors = tuple[list, list]  # ([(j, e)] for (1+t^j)^e, [(k, m)] for (1-t^k)^m)


class Method(enum.Enum):
    RECURSION = "recursion"
    CLOSED = "closed"
    PRODUCT = "product"


# ---------------------------------------------------------------- product formulas

def _q_complex_factors(g: int, r: int) -> Factors:
    num = [(2 * j - 1, 2 * g) for j in range(1, r + 1)]
    den = [(2 * j, 1) for j in range(1, r)] + [(2 * j, 1) for j in range(1, r + 1)]
    return num, den


def _check_case(kt: KleinTopType, tau: Tau, r: int) -> None:
    kt.validate()
    if r < 1:
        raise InvalidType("rank must be at least 1")
    if tau is Tau.QUAT and kt.n > 0 and r % 2:
        raise InvalidType("quaternionic with n>0 requires even rank")


def _q_tau_factors(kt: KleinTopType, tau: Tau, r: int) -> Factors:
    g, n, _ = kt
    two_den = [(2 * j, 1) for j in range(1, r)] + [(2 * j, 1) for j in range(1, r + 1)]
    if tau is Tau.REAL:
        num = [(2 * j - 1, g - n + 1) for j in range(1, r + 1)]
        num += [(j, n) for j in range(1, r)] + [(j, n) for j in range(1, r + 1)]
        return num, two_den
    if n == 0:
        return [(2 * j - 1, g + 1) for j in range(1, r + 1)], two_den
    s = r // 2
    num = [(2 * j - 1, g) for j in range(1, r + 1)]
    den = [(4 * j, 1) for j in range(1, s)] + [(4 * j, 1) for j in range(1, s + 1)]
    return num, den


def _f_tau_factors(kt: KleinTopType, tau: Tau, r: int) -> Factors:
    g, n, _ = kt
    if n == 0:
        return [(2 * j - 1, g + 1) for j in range(1, r + 1)], [(2 * j, 1) for j in range(1, r + 1)]
    if tau is Tau.REAL:
        num = [(2 * j - 1, g - n + 1) for j in range(1, r + 1)]
        num += [(j, n) for j in range(1, r)] + [(j, n) for j in range(1, r + 1)]
        return num, [(2 * j, 1) for j in range(1, r + 1)]
    s = r // 2
    num = [(2 * j - 1, g) for j in range(1, r + 1)] + [(4 * j - 1, 1) for j in range(1, s + 1)]
    return num, [(4 * j, 1) for j in range(1, s + 1)]


def q_complex(g: int, r: int) -> RationalFn:
    if g < 2 or r < 1:
        raise InvalidType("need g >= 2 and r >= 1")
    return RationalFn.from_products(*_q_complex_factors(g, r))


def q_tau(kt: KleinTopType, tau, r: int) -> RationalFn:
    tau = Tau.parse(tau)
    if tau is Tau.COMPLEX:
        return q_complex(kt.g, r)
    _check_case(kt, tau, r)
    return RationalFn.from_products(*_q_tau_factors(kt, tau, r))


def f_tau(kt: KleinTopType, tau, r: int) -> RationalFn:
    tau = Tau.parse(tau)
    if tau is Tau.COMPLEX:
        raise InvalidType("f is defined for the real and quaternionic cases")
    _check_case(kt, tau, r)
    return RationalFn.from_products(*_f_tau_factors(kt, tau, r))


def _q_factors(case: tuple, r: int) -> Factors:
    tau, g, n, a = case
    if tau is Tau.COMPLEX:
        return _q_complex_factors(g, r)
    return _q_tau_factors(KleinTopType(g, n, a), tau, r)


# ---------------------------------------------------------------- recursion

def _case_key(kt: Optional[KleinTopType], tau: Tau, g: int) -> tuple:
    if tau is Tau.COMPLEX:
        return (tau, g, 0, 1)
    return (tau, kt.g, kt.n, kt.a)


@lru_cache(maxsize=None)
def _p_recursive(case: tuple, r: int, d: int, order: int) -> ScaledSeries:
    tau, g, n, a = case
    kt = KleinTopType(g, n, a)
    weight = 2 if tau is Tau.COMPLEX else 1
    result = series_from_products(*_q_factors(case, r), order=order)
    if r == 1:
        return result
    for mu in enumerate_hn_types(r, d, g, order // weight):
        if mu.is_semistable():
            continue
        if not tau_admissible(mu, kt, tau):
            continue
        shift = weight * codim_dmu(mu, g)
        sub_order = order - shift
        term = ScaledSeries.one(order=sub_order)
        for ri, di in mu.blocks:
            term = series_mul(term, _p_recursive(case, ri, di, order).truncate(sub_order))
        mult = real_multiplicity(mu, kt, tau)
        coeffs = (0,) * shift + tuple(mult * c for c in term.coeffs)
        result = result - ScaledSeries(coeffs, 1, order)
    return result


def p_complex_recursive(g: int, r: int, d: int, order: int = DEFAULT_ORDER) -> ScaledSeries:
    """P_g(r, d) to t-order ``order`` from the Atiyah-Bott recursion."""
    if g < 2 or r < 1:
        raise InvalidType("need g >= 2 and r >= 1")
    return _p_recursive(_case_key(None, Tau.COMPLEX, g), r, d, order)


def p_tau_recursive(kt: KleinTopType, tau, r: int, d: int, order: int = DEFAULT_ORDER) -> ScaledSeries:
    """Real/quaternionic P to t-order ``order`` from the equivariant recursion."""
    tau = Tau.parse(tau)
    if tau is Tau.COMPLEX:
        return p_complex_recursive(kt.g, r, d, order)
    _require_valid(kt, tau, r, d)
    return _p_recursive(_case_key(kt, tau, kt.g), r, d, order)


def _require_valid(kt: KleinTopType, tau: Tau, r: int, d: int) -> None:
    kt.validate()
    v = bundle_violations(kt, BundleType(r, d, tau))
    if v:
        raise InvalidType(f"no {tau.value} bundle of rank {r}, degree {d} on {tuple(kt)}: " + "; ".join(v))


# ---------------------------------------------------------------- closed formulas

def _integral_exponent(c: Fraction, scale: int) -> int:
    """Place t**c at scale ``scale`` and read it back in t; fails unless c is integral."""
    s = monomial_frac(c, scale, order=max(ceil(c), 0))
    s = descale(s)
    return next(k for k, x in enumerate(s.coeffs) if x)


def _zagier_sum(
    m: int,
    lam: Fraction,
    xpow: int,
    pair_weight: int,
    mult: int,
    block_factors: Callable[[int], Factors],
) -> RationalFn:
    """sum over compositions of m of
    (-1)^(l-1) mult^(l-1) x^M / prod(1 - x^(m_i+m_{i+1})) t^(pair_weight*sum m_i m_j) prod Q(m_i)
    with x = t**xpow."""
    terms = []
    for comp in compositions(m):
        l = len(comp)
        expo = xpow * zagier_exponent_M(comp, lam) + pair_weight * pair_sum(comp)
        shift = _integral_exponent(Fraction(expo), m)
        num: list = []
        den: list = []
        for mi in comp:
            fn, fd = block_factors(mi)
            num += fn
            den += fd
        den += [(xpow * (comp[i] + comp[i + 1]), 1) for i in range(l - 1)]
        sign = -1 if l % 2 == 0 else 1
        terms.append((sign * mult ** (l - 1), shift, cyclotomic_exponents(num, den)))
    # one common cyclotomic denominator for all 2^(m-1) terms
    return rf_cyclotomic_sum(terms)


def p_complex_zagier(g: int, r: int, d: int) -> RationalFn:
    """P_g(r, d) as a rational function, by Zagier's closed formula."""
    if g < 2 or r < 1:
        raise InvalidType("need g >= 2 and r >= 1")
    return _p_complex_zagier(g, r, d % r)


@lru_cache(maxsize=None)
def _p_complex_zagier(g: int, r: int, d: int) -> RationalFn:
    return _zagier_sum(r, Fraction(d, r), 2, 2 * (g - 1), 1, lambda m: _q_complex_factors(g, m))


def p_tau_closed(kt: KleinTopType, tau, r: int, d: int) -> RationalFn:
    """Real/quaternionic P as a rational function, by the solved recursion."""
    tau = Tau.parse(tau)
    if tau is Tau.COMPLEX:
        return p_complex_zagier(kt.g, r, d)
    _require_valid(kt, tau, r, d)
    g, n, _ = kt
    if n == 0:
        # degree 2d' (real, or quaternionic on odd genus) or 2d' + r (quaternionic, even genus)
        half = (d - r) // 2 if (tau is Tau.QUAT and g % 2 == 0) else d // 2
        return _p_tau_closed(kt, tau, r, half % r)
    if tau is Tau.REAL:
        return _p_tau_closed(kt, tau, r, d % r)
    s = r // 2
    return _p_tau_closed(kt, tau, r, (d // 2) % s)


@lru_cache(maxsize=None)
def _p_tau_closed(kt: KleinTopType, tau: Tau, r: int, lam_num: int) -> RationalFn:
    g, n, _ = kt
    if n == 0:
        return _zagier_sum(r, Fraction(lam_num, r), 2, g - 1, 1,
                           lambda m: _q_tau_factors(kt, tau, m))
    if tau is Tau.REAL:
        return _zagier_sum(r, Fraction(lam_num, r), 1, g - 1, 2 ** (n - 1),
                           lambda m: _q_tau_factors(kt, tau, m))
    s = r // 2
    return _zagier_sum(s, Fraction(lam_num, s), 4, 4 * (g - 1), 1,
                       lambda m: _q_tau_factors(kt, tau, 2 * m))


def p_closed(kt: Optional[KleinTopType], tau, r: int, d: int, g: Optional[int] = None) -> RationalFn:
    tau = Tau.parse(tau)
    if tau is Tau.COMPLEX:
        return p_complex_zagier(g if g is not None else kt.g, r, d)
    return p_tau_closed(kt, tau, r, d)


def p_recursive(kt: Optional[KleinTopType], tau, r: int, d: int, order: int = DEFAULT_ORDER,
                g: Optional[int] = None) -> ScaledSeries:
    tau = Tau.parse(tau)
    if tau is Tau.COMPLEX:
        return p_complex_recursive(g if g is not None else kt.g, r, d, order)
    return p_tau_recursive(kt, tau, r, d, order)


# ---------------------------------------------------------------- moduli spaces

ONE_MINUS_T = RationalFn((1, -1))
ONE_MINUS_T2 = RationalFn((1, 0, -1))


def moduli_poincare(kt: KleinTopType, tau, r: int, d: int) -> Poly:
    """Mod 2 Poincare polynomial (1-t) P of the coprime real/quaternionic moduli space."""
    tau = Tau.parse(tau)
    if gcd(r, d) != 1:
        raise ValueError(f"rank {r} and degree {d} are not coprime")
    f = ONE_MINUS_T * p_tau_closed(kt, tau, r, d)
    p = rf_is_polynomial(f)
    if p is None:
        raise ArithmeticError(f"(1-t)P is not a polynomial for {tuple(kt)}, {tau.value}, ({r},{d})")
    expected = r * r * (kt.g - 1) + 1
    if p.degree != expected:
        raise ArithmeticError(f"moduli polynomial has degree {p.degree}, expected {expected}")
    return p


def complex_moduli_poincare(g: int, r: int, d: int) -> Poly:
    """Rational Poincare polynomial (1-t^2) P_g(r, d) of the coprime complex moduli space."""
    if gcd(r, d) != 1:
        raise ValueError(f"rank {r} and degree {d} are not coprime")
    p = rf_is_polynomial(ONE_MINUS_T2 * p_complex_zagier(g, r, d))
    if p is None:
        raise ArithmeticError("(1-t^2)P_g(r,d) is not a polynomial")
    return p


def fixed_determinant_poincare(g: int) -> Poly:
    """(1+t)^(g-1) ((1+t^2)^g - (2t)^g) / (1-t)^2 for the maximal-curve, rank 2 degree 1 case."""
    if g < 2:
        raise InvalidType("genus must be at least 2")
    one_plus_t = Poly([1, 1])
    top = one_plus_t ** (g - 1) * (Poly([1, 0, 1]) ** g - Poly.monomial(g, 2 ** g))
    f = RationalFn(top, Poly([1, -1]) ** 2)
    p = rf_is_polynomial(f)
    if p is None:
        raise ArithmeticError("fixed-determinant series is not a polynomial")
    return p


# ---------------------------------------------------------------- request routing

class Quantity(enum.Enum):
    P = "P"
    Q = "Q"
    F = "f"


@dataclass(frozen=True)
class SeriesRequest:
    kt: Optional[KleinTopType]
    tau: Tau
    r: int
    d: int = 0
    order: int = DEFAULT_ORDER
    method: Method = Method.CLOSED
    quantity: Quantity = Quantity.P
    g: Optional[int] = None

    @property
    def genus(self) -> int:
        return self.g if self.g is not None else self.kt.g

    def validate(self) -> None:
        if self.order < 1:
            raise InvalidType("order must be at least 1")
        if self.r < 1:
            raise InvalidType("rank must be at least 1")
        if self.tau is Tau.COMPLEX:
            if self.genus < 2:
                raise InvalidType("genus must be at least 2")
            return
        self.kt.validate()
        if self.tau is Tau.QUAT and self.kt.n > 0 and self.r % 2:
            raise InvalidType("quaternionic with n>0 requires even rank")
        if self.quantity is Quantity.P:
            _require_valid(self.kt, self.tau, self.r, self.d)


def compute(req: SeriesRequest):
    """Evaluate a request; returns a RationalFn or (recursion) a ScaledSeries."""
    req.validate()
    if req.quantity is Quantity.F:
        if req.method is not Method.PRODUCT:
            raise InvalidType("f is only available from its product formula (method 'product')")
        return f_tau(req.kt, req.tau, req.r)
    if req.quantity is Quantity.Q:
        if req.method is not Method.PRODUCT:
            raise InvalidType("Q is only available from its product formula (method 'product')")
        return q_complex(req.genus, req.r) if req.tau is Tau.COMPLEX else q_tau(req.kt, req.tau, req.r)
    if req.method is Method.PRODUCT:
        if req.r != 1:
            raise InvalidType("P has a product formula only at rank 1 (no unstable strata)")
        return q_complex(req.genus, 1) if req.tau is Tau.COMPLEX else q_tau(req.kt, req.tau, 1)
    if req.method is Method.RECURSION:
        return p_recursive(req.kt, req.tau, req.r, req.d, req.order, g=req.genus)
    return p_closed(req.kt, req.tau, req.r, req.d, g=req.genus)
