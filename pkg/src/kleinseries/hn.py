"""Topological types and Harder-Narasimhan combinatorics.

Klein surfaces are labelled by (g, n, a): genus, number of real circles and
orientability index of the quotient.  Bundles are real or quaternionic of rank
r and degree d.  An HN type is a list of blocks (r_i, d_i) with strictly
decreasing slopes d_i/r_i.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Optional, Sequence


class Tau(enum.Enum):
    COMPLEX = "complex"
    REAL = "real"
    QUAT = "quat"

    @classmethod
    def parse(cls, s: "str | Tau") -> "Tau":
        if isinstance(s, Tau):
            return s
        aliases = {"c": "complex", "r": "real", "h": "quat", "quaternionic": "quat"}
        return cls(aliases.get(s.lower(), s.lower()))


class InvalidType(ValueError):
    """A topological type or bundle type violating a classification constraint."""


@dataclass(frozen=True)
class KleinTopType:
    g: int
    n: int
    a: int

    def violations(self) -> list[str]:
        g, n, a = self.g, self.n, self.a
        out = []
        if g < 2:
            out.append("genus must be at least 2")
        if a not in (0, 1):
            out.append("orientability index a must be 0 or 1")
        if not 0 <= n <= g + 1:
            out.append("Harnack's theorem: 0 <= n <= g+1")
        if n == 0 and a != 1:
            out.append("n=0 requires a=1")
        if n == g + 1 and a != 0:
            out.append("n=g+1 (maximal curve) requires a=0")
        if a == 0 and (n - g - 1) % 2:
            out.append("a=0 requires n = g+1 mod 2")
        return out

    def validate(self) -> "KleinTopType":
        v = self.violations()
        if v:
            raise InvalidType(f"invalid Klein surface type {tuple(self)}: " + "; ".join(v))
        return self

    def __iter__(self):
        return iter((self.g, self.n, self.a))


def validate_klein(g: int, n: int, a: int) -> bool:
    return not KleinTopType(g, n, a).violations()


def klein_types(g: int) -> list[KleinTopType]:
    """All valid (g, n, a) for a genus, ordered by (n, a)."""
    return [KleinTopType(g, n, a) for n in range(g + 2) for a in (0, 1) if validate_klein(g, n, a)]


@dataclass(frozen=True)
class BundleType:
    r: int
    d: int
    tau: Tau
    w: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "tau", Tau.parse(self.tau))
        if self.w is not None:
            object.__setattr__(self, "w", tuple(self.w))


def bundle_violations(kt: KleinTopType, bt: BundleType) -> list[str]:
    """Named constraints from the topological classification of real/quaternionic bundles."""
    g, n, _ = kt
    r, d = bt.r, bt.d
    out = []
    if r < 1:
        out.append("rank must be at least 1")
    if bt.tau is Tau.REAL:
        if n == 0:
            if d % 2:
                out.append("real n=0 requires even degree")
            if bt.w:
                out.append("real n=0 has no Stiefel-Whitney classes")
        elif bt.w is not None:
            if len(bt.w) != n or any(x not in (0, 1) for x in bt.w):
                out.append(f"w must be a vector of {n} values in {{0,1}}")
            elif sum(bt.w) % 2 != d % 2:
                out.append("real n>0 requires w_1 + ... + w_n = d mod 2")
    elif bt.tau is Tau.QUAT:
        if n > 0 and r % 2:
            out.append("quaternionic with n>0 requires even rank")
        if (d + r * (g - 1)) % 2:
            out.append("quaternionic requires d + r(g-1) even")
    return out


def validate_bundle(kt: KleinTopType, bt: BundleType) -> bool:
    if kt.violations():
        raise InvalidType(f"invalid Klein surface type {tuple(kt)}")
    return not bundle_violations(kt, bt)


def count_bundle_types(kt: KleinTopType, r: int, d: int) -> tuple[int, int]:
    """Number of real topological types (w-vectors) and quaternionic types of rank r, degree d."""
    g, n, _ = kt
    if n == 0:
        real = 1 if d % 2 == 0 else 0
    else:
        real = sum(1 for w in itertools.product((0, 1), repeat=n) if sum(w) % 2 == d % 2)
    quat = 0 if bundle_violations(kt, BundleType(r, d, Tau.QUAT)) else 1
    return real, quat


# ---------------------------------------------------------------- brackets

def frac_bracket(x) -> Fraction:
    """<x> = 1 + floor(x) - x, the unique value in (0, 1] with x + <x> integral."""
    x = Fraction(x)
    return 1 + floor(x) - x


def zagier_exponent_M(comp: Sequence[int], lam) -> Fraction:
    """sum_{i<l} (r_i + r_{i+1}) <(r_1 + ... + r_i) lam>."""
    lam = Fraction(lam)
    total = Fraction(0)
    partial = 0
    for i in range(len(comp) - 1):
        partial += comp[i]
        total += (comp[i] + comp[i + 1]) * frac_bracket(partial * lam)
    return total


def compositions(r: int) -> list[tuple[int, ...]]:
    """All 2**(r-1) ordered compositions of r, in lexicographic order."""
    if r < 1:
        raise ValueError("r must be positive")
    out = []

    def rec(rest, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for k in range(1, rest + 1):
            prefix.append(k)
            rec(rest - k, prefix)
            prefix.pop()

    rec(r, [])
    return out


def pair_sum(comp: Sequence[int]) -> int:
    """sum_{i<j} r_i r_j."""
    s = sum(comp)
    return (s * s - sum(x * x for x in comp)) // 2


# ---------------------------------------------------------------- HN types

@dataclass(frozen=True, order=True)
class HNType:
    blocks: tuple

    def __post_init__(self):
        blocks = tuple((int(r), int(d)) for r, d in self.blocks)
        if not blocks:
            raise ValueError("an HN type has at least one block")
        if any(r < 1 for r, _ in blocks):
            raise ValueError("block ranks must be positive")
        slopes = [Fraction(d, r) for r, d in blocks]
        if any(s <= t for s, t in zip(slopes, slopes[1:])):
            raise ValueError(f"slopes must strictly decrease: {blocks}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def length(self) -> int:
        return len(self.blocks)

    @property
    def rank(self) -> int:
        return sum(r for r, _ in self.blocks)

    @property
    def degree(self) -> int:
        return sum(d for _, d in self.blocks)

    @property
    def slopes(self) -> tuple:
        return tuple(Fraction(d, r) for r, d in self.blocks)

    @property
    def ranks(self) -> tuple:
        return tuple(r for r, _ in self.blocks)

    def is_semistable(self) -> bool:
        return len(self.blocks) == 1


def codim_dmu(mu: HNType, g: int) -> int:
    """sum_{i<j} r_i r_j (mu_i - mu_j + g - 1)."""
    total = Fraction(0)
    b = mu.blocks
    for i in range(len(b)):
        ri, di = b[i]
        for j in range(i + 1, len(b)):
            rj, dj = b[j]
            total += ri * rj * (Fraction(di, ri) - Fraction(dj, rj) + (g - 1))
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral codimension {total} for {b}")
    if len(b) > 1 and total <= 0:
        raise ArithmeticError(f"non-positive codimension {total} for {b}")
    return int(total)


def enumerate_hn_types(r: int, d: int, g: int, max_codim: int) -> list[HNType]:
    """Every HN type of (r, d) with codimension <= max_codim, sorted by blocks.

    Blocks are peeled off from the top: choosing (r_1, d_1) costs
    (d_1 r - d r_1) + (g-1) r_1 (r - r_1) of codimension, which is what the
    remaining blocks are then allowed to spend.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if max_codim < 0:
        return []
    out: list[HNType] = []

    def rec(rr: int, dd: int, budget: int, bound: Optional[Fraction], prefix: list):
        # semistable remainder closes the type
        if bound is None or Fraction(dd, rr) < bound:
            out.append(HNType(tuple(prefix) + ((rr, dd),)))
        for r1 in range(1, rr):
            rest = rr - r1
            fixed = (g - 1) * r1 * rest
            if fixed > budget:
                continue
            # need d1*rr - dd*r1 >= 1 (slope above the average) and <= budget - fixed
            lo = (dd * r1) // rr + 1
            hi_num = budget - fixed + dd * r1
            hi = hi_num // rr
            for d1 in range(lo, hi + 1):
                if bound is not None and Fraction(d1, r1) >= bound:
                    break
                cost = d1 * rr - dd * r1 + fixed
                prefix.append((r1, d1))
                rec(rest, dd - d1, budget - cost, Fraction(d1, r1), prefix)
                prefix.pop()

    rec(r, d, max_codim, None, [])
    return sorted(out)


# which block parities each (tau, n) case admits
def _block_ok(tau: Tau, kt: KleinTopType, r: int, d: int) -> bool:
    g, n, _ = kt
    if tau is Tau.COMPLEX:
        return True
    if tau is Tau.REAL:
        return n > 0 or d % 2 == 0
    if n == 0:
        return (d + r * (g - 1)) % 2 == 0
    return r % 2 == 0 and d % 2 == 0


def tau_admissible(mu: HNType, kt: KleinTopType, tau) -> bool:
    """Whether every block of mu carries a real/quaternionic structure of the right parity."""
    tau = Tau.parse(tau)
    return all(_block_ok(tau, kt, r, d) for r, d in mu.blocks)


def real_multiplicity(mu: HNType, kt: KleinTopType, tau) -> int:
    """Number of real HN types over one holomorphic type: 2^((n-1)(l-1)) for real n>0."""
    tau = Tau.parse(tau)
    if tau is Tau.REAL and kt.n > 0:
        return 2 ** ((kt.n - 1) * (mu.length - 1))
    return 1


def orientability_obstruction(mu: HNType, r: int, d: int, g: int) -> tuple[int, ...]:
    """Coefficients mod 2 of the restricted first Stiefel-Whitney class of the normal bundle."""
    if r % 2 == 0:
        return tuple(((d + g - 1) * ri) % 2 for ri, _ in mu.blocks)
    return tuple((di + d * ri) % 2 for ri, di in mu.blocks)
