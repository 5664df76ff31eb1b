import itertools
import random
from fractions import Fraction

import pytest

from kleinseries import (
    BundleType,
    HNType,
    KleinTopType,
    Tau,
    codim_dmu,
    compositions,
    count_bundle_types,
    enumerate_hn_types,
    frac_bracket,
    klein_types,
    orientability_obstruction,
    real_multiplicity,
    tau_admissible,
    validate_bundle,
    validate_klein,
    zagier_exponent_M,
)
from kleinseries.hn import InvalidType, bundle_violations, pair_sum


# ---------------------------------------------------------------- oracles

def brute_hn_types(r, d, g, max_codim):
    """Nested loops over rank compositions and bounded degree vectors."""
    found = set()
    for comp in compositions(r):
        # slopes lie within max_codim of d/r, which bounds each d_i
        ranges = [range(-ri * (abs(d) + max_codim + 1), ri * (abs(d) + max_codim + 1) + 1) for ri in comp[:-1]]
        for ds in itertools.product(*ranges):
            last = d - sum(ds)
            blocks = list(zip(comp, ds + (last,)))
            slopes = [Fraction(b, a) for a, b in blocks]
            if any(s <= u for s, u in zip(slopes, slopes[1:])):
                continue
            total = sum(
                blocks[i][0] * blocks[j][0] * (slopes[i] - slopes[j] + g - 1)
                for i in range(len(blocks)) for j in range(i + 1, len(blocks))
            )
            if total <= max_codim:
                found.add(tuple(blocks))
    return sorted(found)


def direct_obstruction(blocks, r, d, g):
    """Evaluate the linear form on each basis vector e_i and reduce mod 2."""
    def form(w):
        if r % 2 == 0:
            return (d + g - 1) * sum(ri * wi for (ri, _), wi in zip(blocks, w))
        return sum((di + d * ri) * wi for (ri, di), wi in zip(blocks, w))
    l = len(blocks)
    return tuple(form([int(i == j) for j in range(l)]) % 2 for i in range(l))


# ---------------------------------------------------------------- klein / bundle types

def test_validate_klein_examples():
    assert validate_klein(2, 3, 0)
    assert not validate_klein(2, 0, 0)
    assert validate_klein(3, 2, 0)
    assert not validate_klein(2, 4, 0)  # beyond Harnack's bound
    assert not validate_klein(2, 3, 1)


def test_violations_are_named():
    msgs = KleinTopType(2, 0, 0).violations()
    assert "n=0 requires a=1" in msgs
    with pytest.raises(InvalidType, match="Harnack"):
        KleinTopType(2, 5, 0).validate()


def test_klein_types_genus_two():
    assert [tuple(k) for k in klein_types(2)] == [(2, 0, 1), (2, 1, 0), (2, 1, 1), (2, 2, 1), (2, 3, 0)]


def test_validate_bundle_examples():
    assert not validate_bundle(KleinTopType(2, 0, 1), BundleType(2, 3, Tau.REAL))
    assert validate_bundle(KleinTopType(3, 0, 1), BundleType(2, 0, Tau.QUAT))
    assert validate_bundle(KleinTopType(2, 2, 1), BundleType(2, 1, Tau.REAL, (1, 0)))
    assert not validate_bundle(KleinTopType(2, 2, 1), BundleType(2, 1, Tau.REAL, (1, 1)))
    assert "quaternionic with n>0 requires even rank" in bundle_violations(
        KleinTopType(2, 2, 1), BundleType(3, 0, "quat"))


def test_count_bundle_types_examples():
    assert count_bundle_types(KleinTopType(2, 3, 0), 2, 1) == (4, 0)
    # real needs even degree; quaternionic needs d + r(g-1) = 2 even, which holds
    assert count_bundle_types(KleinTopType(2, 0, 1), 1, 1) == (0, 1)
    assert count_bundle_types(KleinTopType(3, 4, 0), 2, 0) == (8, 1)


# ---------------------------------------------------------------- brackets and compositions

def test_frac_bracket_examples():
    assert frac_bracket(Fraction(1, 2)) == Fraction(1, 2)
    assert frac_bracket(0) == 1
    assert frac_bracket(Fraction(-1, 3)) == Fraction(1, 3)
    assert frac_bracket(Fraction(7, 3)) == Fraction(2, 3)


def test_frac_bracket_property_seeded():
    rng = random.Random(2024)
    for _ in range(1000):
        x = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
        b = frac_bracket(x)
        assert 0 < b <= 1 and (x + b).denominator == 1


def test_zagier_exponent_examples():
    assert zagier_exponent_M((2,), Fraction(5, 7)) == 0
    assert zagier_exponent_M((1, 1), Fraction(1, 2)) == 1
    assert zagier_exponent_M((1, 2), Fraction(1, 3)) == 2


@pytest.mark.parametrize("r", range(1, 8))
def test_zagier_exponent_is_integral_at_slope_d_over_r(r):
    for d in range(r):
        for comp in compositions(r):
            assert zagier_exponent_M(comp, Fraction(d, r)).denominator == 1


def test_compositions():
    assert compositions(1) == [(1,)]
    assert compositions(2) == [(1, 1), (2,)]
    assert len(compositions(3)) == 4
    assert all(sum(c) == 6 for c in compositions(6)) and len(set(compositions(6))) == 32
    assert pair_sum((1, 2, 3)) == 2 + 3 + 6


# ---------------------------------------------------------------- HN types

def test_codim_examples():
    assert codim_dmu(HNType(((3, 1),)), 2) == 0
    assert codim_dmu(HNType(((1, 1), (1, 0))), 2) == 2
    # 1*2*(2 - 1/2 + 2) = 7
    assert codim_dmu(HNType(((1, 2), (2, 1))), 3) == 7


def test_hn_type_requires_decreasing_slopes():
    with pytest.raises(ValueError):
        HNType(((1, 0), (1, 1)))
    with pytest.raises(ValueError):
        HNType(((2, 2), (1, 1)))


def test_enumerate_examples():
    assert enumerate_hn_types(1, 5, 2, 10) == [HNType(((1, 5),))]
    got = enumerate_hn_types(2, 0, 2, 5)
    assert got == sorted([HNType(((2, 0),)), HNType(((1, 1), (1, -1))), HNType(((1, 2), (1, -2)))])
    assert [codim_dmu(m, 2) for m in got if not m.is_semistable()] == sorted([3, 5])


@pytest.mark.parametrize("g", [2, 3])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_enumerate_matches_brute_force(r, g):
    for d in range(-3, 4):
        full = brute_hn_types(r, d, g, 12)
        for c in range(13):
            want = [b for b in full if codim_dmu(HNType(b), g) <= c]
            got = [m.blocks for m in enumerate_hn_types(r, d, g, c)]
            assert got == want, (r, d, g, c)


def test_tau_admissible_examples():
    assert not tau_admissible(HNType(((1, 1), (1, -1))), KleinTopType(2, 0, 1), "real")
    assert tau_admissible(HNType(((2, 0), (2, -2))), KleinTopType(2, 2, 1), "quat")
    assert tau_admissible(HNType(((1, 1), (1, 0))), KleinTopType(2, 2, 1), "real")
    assert not tau_admissible(HNType(((2, 1), (2, -1))), KleinTopType(2, 2, 1), "quat")


def test_real_multiplicity_examples():
    two = HNType(((1, 1), (1, 0)))
    assert real_multiplicity(two, KleinTopType(3, 3, 1), Tau.REAL) == 4
    five = HNType(tuple((1, 10 - 2 * i) for i in range(5)))
    assert real_multiplicity(five, KleinTopType(2, 0, 1), Tau.REAL) == 1
    assert real_multiplicity(HNType(((2, 1),)), KleinTopType(3, 3, 1), Tau.REAL) == 1
    assert real_multiplicity(two, KleinTopType(3, 3, 1), Tau.QUAT) == 1


def test_orientability_examples():
    assert orientability_obstruction(HNType(((1, 1), (1, 0))), 2, 1, 2) == (0, 0)
    assert orientability_obstruction(HNType(((1, 1), (2, -1))), 3, 0, 2) == (1, 1)
    assert orientability_obstruction(HNType(((1, 2), (1, -1))), 2, 1, 3) == (1, 1)


def random_hn_type(rng):
    while True:
        r = rng.randint(1, 7)
        comp = rng.choice(compositions(r))
        blocks = [(ri, rng.randint(-9, 9)) for ri in comp]
        blocks.sort(key=lambda b: Fraction(b[1], b[0]), reverse=True)
        slopes = [Fraction(b, a) for a, b in blocks]
        if all(s > u for s, u in zip(slopes, slopes[1:])):
            return HNType(tuple(blocks))


def test_orientability_matches_direct_evaluation_seeded():
    rng = random.Random(31)
    for _ in range(100):
        mu = random_hn_type(rng)
        g = rng.randint(2, 6)
        assert orientability_obstruction(mu, mu.rank, mu.degree, g) == direct_obstruction(mu.blocks, mu.rank, mu.degree, g)
