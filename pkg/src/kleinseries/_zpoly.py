"""Dense integer polynomial kernels.

Polynomials are tuples of Python ints, lowest degree first, with no trailing
zeros (the zero polynomial is the empty tuple).  Everything above this layer
(``Poly``, ``RationalFn``, ``ScaledSeries``) funnels its heavy arithmetic
through these functions.

Two multiplication paths exist:

* ``kronecker`` packs both operands into a single big integer (evaluation at
  a power of two), multiplies once with CPython's bigint multiply and unpacks;
* ``schoolbook`` is the plain double loop.

``KLEINSERIES_KERNEL=schoolbook`` forces the reference path everywhere; the
default picks Kronecker above a small size threshold.  ``benchmarks/`` times
both.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd

ZPoly = tuple

_KERNEL = os.environ.get("KLEINSERIES_KERNEL", "auto").lower()
if _KERNEL not in ("auto", "kronecker", "schoolbook"):
    raise ValueError(f"KLEINSERIES_KERNEL must be auto, kronecker or schoolbook, not {_KERNEL!r}")

# below this many coefficient products the double loop wins
_KRONECKER_MIN_WORK = 64


def kernel_mode() -> str:
    return _KERNEL


def set_kernel_mode(mode: str) -> None:
    """Switch the multiplication path at runtime (used by the benchmark)."""
    global _KERNEL
    if mode not in ("auto", "kronecker", "schoolbook"):
        raise ValueError(mode)
    _KERNEL = mode


def strip(c) -> ZPoly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def add(a: ZPoly, b: ZPoly) -> ZPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return strip(out)


def neg(a: ZPoly) -> ZPoly:
    return tuple(-x for x in a)


def sub(a: ZPoly, b: ZPoly) -> ZPoly:
    return add(a, neg(b))


def scale(a: ZPoly, k: int) -> ZPoly:
    if k == 0:
        return ()
    return tuple(k * x for x in a)


def shift(a: ZPoly, k: int) -> ZPoly:
    """Multiply by x**k (k >= 0)."""
    if not a:
        return a
    return (0,) * k + a


def maxnorm(a: ZPoly) -> int:
    return max((abs(x) for x in a), default=0)


def content(a: ZPoly) -> int:
    g = 0
    for x in a:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def primitive(a: ZPoly) -> tuple[int, ZPoly]:
    """Split into (content, primitive part) with positive leading coefficient."""
    if not a:
        return 0, ()
    c = content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return 1, a
    return c, tuple(x // c for x in a)


def evaluate(a: ZPoly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------- multiply

def mul_schoolbook(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return strip(out)


def _pack(a: ZPoly, bits: int) -> int:
    # a[0] + a[1]*2**bits + ... ; negative entries borrow from the next digit
    v = 0
    for c in reversed(a):
        v = (v << bits) + c
    return v


def _unpack_signed(v: int, n: int, bits: int) -> list:
    nbytes = bits // 8
    half = 1 << (bits - 1)
    # bias every digit into [0, 2**bits) so the packed value is non-negative
    bias = 0
    unit = half
    for _ in range(n):
        bias = (bias << bits) + unit
    v += bias
    raw = v.to_bytes(n * nbytes + 1, "little")
    out = []
    for i in range(n):
        d = int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little")
        out.append(d - half)
    return out


def mul_kronecker(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return ()
    bound = min(len(a), len(b)) * maxnorm(a) * maxnorm(b)
    bits = bound.bit_length() + 2
    bits = (bits + 7) // 8 * 8
    n = len(a) + len(b) - 1
    v = _pack(a, bits) * _pack(b, bits)
    return strip(_unpack_signed(v, n, bits))


def mul(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return ()
    if _KERNEL == "schoolbook":
        return mul_schoolbook(a, b)
    if _KERNEL == "auto" and len(a) * len(b) < _KRONECKER_MIN_WORK:
        return mul_schoolbook(a, b)
    return mul_kronecker(a, b)


def power(a: ZPoly, e: int) -> ZPoly:
    if e < 0:
        raise ValueError("negative exponent")
    result: ZPoly = (1,)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def product(polys) -> ZPoly:
    """Balanced product tree; keeps operand sizes matched for Kronecker."""
    items = [p for p in polys]
    if not items:
        return (1,)
    while len(items) > 1:
        nxt = [mul(items[i], items[i + 1]) for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


# ---------------------------------------------------------------- divide

def divexact(a: ZPoly, b: ZPoly) -> ZPoly | None:
    """Return q with a == q*b over Z, or None when b does not divide a in Z[x]."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return ()
    if len(a) < len(b):
        return None
    rem = list(a)
    lb = b[-1]
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + db]
        if c == 0:
            continue
        qk, r = divmod(c, lb)
        if r:
            return None
        q[k] = qk
        for j in range(db + 1):
            rem[k + j] -= qk * b[j]
    if any(rem[:db]):
        return None
    return strip(q)


def divrem_rational(a, b):
    """Long division with Fraction arithmetic; a, b are coefficient sequences."""
    if not any(b):
        raise ZeroDivisionError("division by the zero polynomial")
    b = _strip_any(b)
    rem = _strip_any(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], rem
    lb = b[-1]
    q = [Fraction(0)] * (len(rem) - db)
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + db]
        if c == 0:
            continue
        qk = Fraction(c) / lb
        q[k] = qk
        for j in range(db + 1):
            rem[k + j] -= qk * b[j]
    return _strip_any(q), _strip_any(rem[:db])


def _strip_any(c) -> list:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def div_one_minus_x(a: ZPoly) -> ZPoly:
    """Synthetic division of a by (1 - x); caller guarantees a(1) == 0."""
    # a = (1 - x) q  <=>  q_k = a_0 + ... + a_k
    q = []
    acc = 0
    for c in a[:-1]:
        acc += c
        q.append(acc)
    return strip(q)


# ---------------------------------------------------------------- gcd

def _interpolate(h: int, x: int) -> ZPoly:
    """Symmetric base-x digits of h, read back as a polynomial."""
    out = []
    half = x // 2
    while h:
        d = h % x
        if d > half:
            d -= x
        out.append(d)
        h = (h - d) // x
    return strip(out)


def _gcd_heuristic(f: ZPoly, g: ZPoly):
    """GCDHEU on primitive inputs; returns (h, f/h, g/h) or None.

    Cofactors are read off the integer quotients and certified by one
    multiplication each, which is much cheaper than trial division.
    """
    xi = 2 * min(maxnorm(f), maxnorm(g)) + 29
    for _ in range(6):
        fx = evaluate(f, xi)
        gx = evaluate(g, xi)
        if fx and gx:
            h = _interpolate(gcd(fx, gx), xi)
            _, h = primitive(h)
            if h:
                hx = evaluate(h, xi)
                if hx and fx % hx == 0 and gx % hx == 0:
                    cf = _interpolate(fx // hx, xi)
                    cg = _interpolate(gx // hx, xi)
                    if mul(h, cf) == f and mul(h, cg) == g:
                        return h, cf, cg
                    # cofactors too large for this xi; h may still be right
                    cf = divexact(f, h)
                    if cf is not None:
                        cg = divexact(g, h)
                        if cg is not None:
                            return h, cf, cg
        xi = xi * 73794 // 27011 + 1
    return None


def _gcd_euclid(f: ZPoly, g: ZPoly) -> ZPoly:
    """Primitive-remainder Euclid; slow but unconditional."""
    a, b = f, g
    while b:
        _, r = divrem_rational(a, b)
        if not r:
            a = b
            break
        den = 1
        for c in r:
            den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
        r_int = strip(int(c * den) for c in r)
        _, r_int = primitive(r_int)
        a, b = b, r_int
    _, a = primitive(a)
    return a


def gcd_cofactors(f: ZPoly, g: ZPoly) -> tuple[ZPoly, ZPoly, ZPoly]:
    """Return (h, f/h, g/h) with h the primitive gcd (positive lead) in Z[x].

    Content is kept on the cofactors, so f == h*cf and g == h*cg exactly.
    """
    if not f and not g:
        raise ValueError("gcd of two zero polynomials")
    if not f:
        cg, pg = primitive(g)
        return pg, (), (cg,)
    if not g:
        cf, pf = primitive(f)
        return pf, (cf,), ()
    cf, pf = primitive(f)
    cg, pg = primitive(g)
    if len(pf) == 1 or len(pg) == 1:
        return (1,), f, g
    res = _gcd_heuristic(pf, pg)
    if res is None:
        h = _gcd_euclid(pf, pg)
        qf, qg = divexact(pf, h), divexact(pg, h)
        assert qf is not None and qg is not None
    else:
        h, qf, qg = res
    return h, scale(qf, cf), scale(qg, cg)


# ---------------------------------------------------------------- cyclotomics

_CYCLO: dict[int, ZPoly] = {}


def one_minus_power(k: int) -> ZPoly:
    """1 - x**k."""
    return (1,) + (0,) * (k - 1) + (-1,)


def one_plus_power(k: int) -> ZPoly:
    """1 + x**k."""
    return (1,) + (0,) * (k - 1) + (1,)


def cyclotomic(m: int) -> ZPoly:
    """The m-th cyclotomic polynomial, by exact division of x**m - 1."""
    if m in _CYCLO:
        return _CYCLO[m]
    p: ZPoly = (-1,) + (0,) * (m - 1) + (1,)
    for k in range(1, m):
        if m % k == 0:
            q = divexact(p, cyclotomic(k))
            assert q is not None
            p = q
    _CYCLO[m] = p
    return p
