"""Theorem checks: golden tables, dualities, maximality and structural identities.

Every check returns a ``CheckReport``.  A failing report always carries a
witness: the first mismatching coefficient of two series, or the lowest
nonzero coefficient of the cross-multiplication residue of two rational
functions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Callable, Iterable, Iterator, Optional

from . import _zpoly as Z
from . import appendix
from .engine import (
    ONE_MINUS_T,
    ONE_MINUS_T2,
    f_tau,
    fixed_determinant_poincare,
    p_complex_recursive,
    p_complex_zagier,
    p_tau_closed,
    p_tau_recursive,
    q_complex,
    q_tau,
)
from .exact import BigRat, Poly, format_rat
from .hn import BundleType, InvalidType, KleinTopType, Tau, bundle_violations, klein_types
from .ratfunc import RationalFn, duality_check, limit_at_one, rf_reciprocal, rf_to_series

PASS, FAIL = "pass", "fail"


@dataclass
class CheckReport:
    check_id: str
    inputs: dict
    verdict: str
    witness: Optional[dict] = None

    def __post_init__(self):
        if self.verdict not in (PASS, FAIL):
            raise ValueError(f"bad verdict {self.verdict!r}")
        if self.verdict == FAIL and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self) -> dict:
        out = {"check_id": self.check_id, "inputs": self.inputs, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def _jsonable(x: Any) -> Any:
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return format_rat(x)


# ---------------------------------------------------------------- witnesses

def rf_residue_witness(a: RationalFn, b: RationalFn) -> Optional[dict]:
    """None if a == b, else the lowest nonzero term of a.num*b.den - b.num*a.den."""
    res = Z.sub(Z.mul(a.num, b.den), Z.mul(b.num, a.den))
    if not res:
        return None
    k = next(i for i, c in enumerate(res) if c)
    return {"residue_degree": len(res) - 1, "lowest_term": [k, res[k]]}


def series_witness(expected: Iterable, got: Iterable) -> Optional[dict]:
    """None if equal, else the first differing coefficient."""
    e, g = list(expected), list(got)
    for k in range(max(len(e), len(g))):
        x = e[k] if k < len(e) else 0
        y = g[k] if k < len(g) else 0
        if x != y:
            return {"coefficient": k, "expected": format_rat(x), "got": format_rat(y)}
    return None


def _report(check_id: str, inputs: dict, witness: Optional[dict]) -> CheckReport:
    return CheckReport(check_id, _jsonable(inputs), PASS if witness is None else FAIL, witness)


def _kt_for(g: int, n: int) -> KleinTopType:
    # a is irrelevant to every series here; pick the valid value
    a = 1 if n == 0 else (0 if n == g + 1 else 1)
    return KleinTopType(g, n, a).validate()


# ---------------------------------------------------------------- golden tables

APPENDIX_CASES = ("complex", "real_n0", "real_npos", "quat_npos", "quat_n0")


def check_appendix(r: int, case_id: str, g: int, d: int, n: int = 1) -> CheckReport:
    """Compare a transcribed table entry with the engine's closed formula.

    ``d`` follows the table's own convention (half-degree for real n=0 and
    quaternionic n>0).  ``quat_n0`` checks the delegation of quaternionic n=0
    to the real n=0 table: degree 2d on odd genus, 2d + r on even genus.
    """
    if r > 4:
        raise ValueError("tables cover r <= 4")
    inputs = {"case": case_id, "g": g, "r": r, "d": d}
    if case_id == "complex":
        gold, got = appendix.complex_p(g, r, d), p_complex_zagier(g, r, d)
    elif case_id == "real_n0":
        gold, got = appendix.real_n0_p(g, r, d), p_tau_closed(_kt_for(g, 0), Tau.REAL, r, 2 * d)
    elif case_id == "real_npos":
        inputs["n"] = n
        gold, got = appendix.real_np_p(g, n, r, d), p_tau_closed(_kt_for(g, n), Tau.REAL, r, d)
    elif case_id == "quat_npos":
        inputs["n"] = n
        gold, got = appendix.quat_np_p(g, r, d), p_tau_closed(_kt_for(g, n), Tau.QUAT, r, 2 * d)
    elif case_id == "quat_n0":
        deg = 2 * d if g % 2 else 2 * d + r
        gold, got = appendix.real_n0_p(g, r, d), p_tau_closed(_kt_for(g, 0), Tau.QUAT, r, deg)
    else:
        raise ValueError(f"unknown appendix case {case_id!r}")
    suffix = f"/n{n}" if case_id in ("real_npos", "quat_npos") else ""
    return _report(f"appendix/{case_id}/g{g}/r{r}/d{d}{suffix}", inputs, rf_residue_witness(gold, got))


def appendix_suite(genera: Iterable[int] = (2, 3, 4)) -> Iterator[CheckReport]:
    for g in genera:
        for r in (1, 2, 3, 4):
            for d in range(r):
                yield check_appendix(r, "complex", g, d)
            # brackets in the half-degree have period r (period 2r/2 = r)
            for d in range(r):
                yield check_appendix(r, "real_n0", g, d)
                yield check_appendix(r, "quat_n0", g, d)
            for n in range(1, g + 2):
                for d in range(r):
                    yield check_appendix(r, "real_npos", g, d, n)
            if r in (2, 4):
                for d in range(r // 2):
                    yield check_appendix(r, "quat_npos", g, d, 1)


# ---------------------------------------------------------------- dualities

def duality_hypothesis(kt: KleinTopType, tau, r: int, d: int) -> Optional[str]:
    """None when a duality theorem applies, else the reason it does not."""
    tau = Tau.parse(tau)
    v = bundle_violations(kt, BundleType(r, d, tau))
    if v:
        return "; ".join(v)
    g, n, _ = kt
    if tau is Tau.COMPLEX:
        return "complex series are not covered"
    if n > 0 and tau is Tau.REAL:
        return None if gcd(r, d) == 1 else "real n>0 needs r and d coprime"
    if n > 0:
        return None if gcd(r // 2, d // 2) == 1 else "quaternionic n>0 needs r/2 and d/2 coprime"
    half = (d - r) // 2 if (tau is Tau.QUAT and g % 2 == 0) else d // 2
    return None if gcd(r, half) == 1 else f"n=0 needs r coprime to d'={half}"


def check_strange_duality(kt: KleinTopType, tau, r: int, d: int) -> CheckReport:
    """t^(r^2(g-1)+1) P(1/t) == P for P = (1-t) P^tau(r, d)."""
    tau = Tau.parse(tau)
    why = duality_hypothesis(kt, tau, r, d)
    if why is not None:
        raise InvalidType(f"duality hypothesis fails: {why}")
    D = r * r * (kt.g - 1) + 1
    f = ONE_MINUS_T * p_tau_closed(kt, tau, r, d)
    inputs = {"kt": list(kt), "tau": tau.value, "r": r, "d": d, "D": D}
    witness = None
    if not duality_check(f, D):
        witness = rf_residue_witness(reciprocal_image(f, D), f)
    cid = f"duality/{tau.value}/g{kt.g}n{kt.n}a{kt.a}/r{r}/d{d}"
    return _report(cid, inputs, witness)


def reciprocal_image(f: RationalFn, D: int) -> RationalFn:
    """t**D * f(1/t) as a rational function."""
    g, e = rf_reciprocal(f)
    return g * RationalFn.monomial(D + e)


def duality_suite(max_genus: int = 4) -> Iterator[CheckReport]:
    for g in range(2, max_genus + 1):
        for kt in klein_types(g):
            cases = []
            if kt.n > 0:
                for rp in (1, 2):
                    cases += [(Tau.QUAT, 2 * rp, 2 * dp) for dp in range(1, rp + 1) if gcd(rp, dp) == 1]
                cases += [(Tau.REAL, r, d) for r in (2, 3) for d in range(1, r) if gcd(r, d) == 1]
            else:
                for r in (1, 2, 3):
                    for dp in range(r):
                        if gcd(r, dp) != 1:
                            continue
                        cases.append((Tau.REAL, r, 2 * dp))
                        cases.append((Tau.QUAT, r, 2 * dp + (r if g % 2 == 0 else 0)))
            for tau, r, d in cases:
                yield check_strange_duality(kt, tau, r, d)


# ---------------------------------------------------------------- totals and maximality

def total_betti_complex_moduli(g: int, r: int, d: int) -> BigRat:
    """Total rational Betti number of the coprime complex moduli space."""
    if gcd(r, d) != 1:
        raise ValueError(f"rank {r} and degree {d} are not coprime")
    return limit_at_one(ONE_MINUS_T2 * p_complex_zagier(g, r, d))


def total_betti_real_moduli(kt: KleinTopType, r: int = 2, d: int = 1) -> BigRat:
    """2^(n-1) times the total mod 2 Betti number of one real component."""
    kt.validate()
    if kt.n < 1:
        raise InvalidType("real moduli totals need n >= 1")
    if gcd(r, d) != 1:
        raise ValueError(f"rank {r} and degree {d} are not coprime")
    return 2 ** (kt.n - 1) * limit_at_one(ONE_MINUS_T * p_tau_closed(kt, Tau.REAL, r, d))


def expected_real_total_rank2(kt: KleinTopType) -> int:
    g, n, _ = kt
    return (2 * g - n + 1) * 2 ** (2 * g + 2 * n - 4)


def check_maximality(g: int, r: int, d: int) -> CheckReport:
    """Complex total equals 2^g times the real total on the maximal curve."""
    if gcd(r, d) != 1:
        raise ValueError(f"rank {r} and degree {d} are not coprime")
    c = total_betti_complex_moduli(g, r, d)
    real = total_betti_real_moduli(KleinTopType(g, g + 1, 0), r, d)
    witness = None if c == real else {"complex_total": format_rat(c), "real_total": format_rat(real)}
    return _report(f"maximality/g{g}/r{r}/d{d}", {"g": g, "r": r, "d": d}, witness)


def check_non_maximal(kt: KleinTopType, r: int = 2, d: int = 1) -> CheckReport:
    """On a non-maximal curve the real total is strictly smaller."""
    c = total_betti_complex_moduli(kt.g, r, d)
    real = total_betti_real_moduli(kt, r, d)
    witness = None if real < c else {"complex_total": format_rat(c), "real_total": format_rat(real)}
    cid = f"non_maximal/g{kt.g}n{kt.n}a{kt.a}/r{r}/d{d}"
    return _report(cid, {"kt": list(kt), "r": r, "d": d}, witness)


def check_rank2_totals(kt: KleinTopType) -> CheckReport:
    got = total_betti_real_moduli(kt, 2, 1)
    want = expected_real_total_rank2(kt)
    witness = None if got == want else {"expected": want, "got": format_rat(got)}
    return _report(f"real_total/g{kt.g}n{kt.n}a{kt.a}/r2/d1", {"kt": list(kt)}, witness)


def maximality_suite(max_genus: int = 5, max_rank: int = 6) -> Iterator[CheckReport]:
    for g in range(2, max_genus + 1):
        for r in range(2, max_rank + 1):
            for d in range(1, r):
                if gcd(r, d) == 1:
                    yield check_maximality(g, r, d)
    for g in range(2, max_genus + 1):
        yield _report(f"complex_total/g{g}/r2/d1", {"g": g},
                      None if total_betti_complex_moduli(g, 2, 1) == g * 2 ** (4 * g - 2)
                      else {"expected": g * 2 ** (4 * g - 2)})
        for kt in klein_types(g):
            if kt.n == 0:
                continue
            yield check_rank2_totals(kt)
            if kt.n < g + 1:
                yield check_non_maximal(kt)


def check_saveliev_wang() -> CheckReport:
    got = fixed_determinant_poincare(2)
    want = Poly([1, 3, 3, 1])
    witness = series_witness(want.coeffs, got.coeffs)
    if witness is None and got(1) != 8:
        witness = {"value_at_1": format_rat(got(1)), "expected": 8}
    return _report("saveliev_wang/g2", {"g": 2}, witness)


def saveliev_wang_suite(max_genus: int = 6) -> Iterator[CheckReport]:
    yield check_saveliev_wang()
    for g in range(2, max_genus + 1):
        v = fixed_determinant_poincare(g)(1)
        want = g * 2 ** (2 * g - 2)
        yield _report(f"saveliev_wang/value_at_1/g{g}", {"g": g},
                      None if v == want else {"expected": want, "got": format_rat(v)})


# ---------------------------------------------------------------- structural identities

def check_q_from_f(kt: KleinTopType, r: int) -> CheckReport:
    """Q^R(r) == f^R(r) / prod_{i<r} (1 - t^(2i))."""
    den = RationalFn.from_products((), [(2 * i, 1) for i in range(1, r)])
    w = rf_residue_witness(q_tau(kt, Tau.REAL, r), f_tau(kt, Tau.REAL, r) * den)
    return _report(f"structural/q_from_f/g{kt.g}n{kt.n}a{kt.a}/r{r}", {"kt": list(kt), "r": r}, w)


def check_q_reciprocal(kt: KleinTopType, tau, r: int) -> CheckReport:
    """t^(r^2(g-1)) Q(1/t) == -Q(t)."""
    tau = Tau.parse(tau)
    q = q_tau(kt, tau, r)
    w = rf_residue_witness(reciprocal_image(q, r * r * (kt.g - 1)), -q)
    cid = f"structural/q_reciprocal/{tau.value}/g{kt.g}n{kt.n}a{kt.a}/r{r}"
    return _report(cid, {"kt": list(kt), "tau": tau.value, "r": r}, w)


def check_q_coincidence(g: int, r: int) -> CheckReport:
    """On curves without real points, the real and quaternionic Q series coincide."""
    kt = _kt_for(g, 0)
    w = rf_residue_witness(q_tau(kt, Tau.REAL, r), q_tau(kt, Tau.QUAT, r))
    return _report(f"structural/q_coincidence/g{g}/r{r}", {"g": g, "r": r}, w)


def check_rank_one(kt: KleinTopType, tau) -> CheckReport:
    """At rank 1 every admissible case is (1+t)^(g+1)/(1-t^2)."""
    tau = Tau.parse(tau)
    want = RationalFn.from_products([(1, kt.g + 1)], [(2, 1)])
    d = 0 if tau is Tau.REAL else (kt.g - 1) % 2
    w = rf_residue_witness(want, p_tau_closed(kt, tau, 1, d))
    if w is None:
        s = p_tau_recursive(kt, tau, 1, d, 30)
        w = series_witness(rf_to_series(want, 30).coeffs, s.coeffs)
    return _report(f"anchor/{tau.value}/g{kt.g}n{kt.n}a{kt.a}", {"kt": list(kt), "tau": tau.value}, w)


def check_equal(gp: int, r: int, d: int, part: str) -> CheckReport:
    """Identities relating real and quaternionic series on curves without real points.

    part a: P^R_{(2g'-1,0,1)}(r,2d) == P^H_{(2g'-1,0,1)}(r,2d) == P_{g'}(r,d)
    part b: P^R_{(2g',0,1)}(r,2d) == P^H_{(2g',0,1)}(r,2d+r)
    """
    if part == "a":
        kt = KleinTopType(2 * gp - 1, 0, 1)
        real = p_tau_closed(kt, Tau.REAL, r, 2 * d)
        w = rf_residue_witness(real, p_tau_closed(kt, Tau.QUAT, r, 2 * d))
        if w is None and gp >= 2:
            w = rf_residue_witness(real, p_complex_zagier(gp, r, d))
    elif part == "b":
        kt = KleinTopType(2 * gp, 0, 1)
        w = rf_residue_witness(p_tau_closed(kt, Tau.REAL, r, 2 * d), p_tau_closed(kt, Tau.QUAT, r, 2 * d + r))
    else:
        raise ValueError("part must be 'a' or 'b'")
    return _report(f"equal/{part}/gp{gp}/r{r}/d{d}", {"gp": gp, "r": r, "d": d, "part": part}, w)


def structural_suite(max_rank: int = 4, genera: Iterable[int] = (2, 3, 4)) -> Iterator[CheckReport]:
    genera = tuple(genera)
    for g in genera:
        for kt in klein_types(g):
            yield check_rank_one(kt, Tau.REAL)
            if kt.n == 0:
                yield check_rank_one(kt, Tau.QUAT)
            for r in range(1, max_rank + 1):
                yield check_q_from_f(kt, r)
                yield check_q_reciprocal(kt, Tau.REAL, r)
                if kt.n == 0 or r % 2 == 0:
                    yield check_q_reciprocal(kt, Tau.QUAT, r)
        for r in range(1, max_rank + 1):
            yield check_q_coincidence(g, r)


def equal_suite(max_rank: int = 4, max_gp: int = 3) -> Iterator[CheckReport]:
    for gp in range(1, max_gp + 1):
        for r in range(1, max_rank + 1):
            for d in range(r):
                # genus 2g'-1 must be at least 2
                if gp >= 2:
                    yield check_equal(gp, r, d, "a")
                yield check_equal(gp, r, d, "b")


# ---------------------------------------------------------------- differential

def check_differential(kt: Optional[KleinTopType], tau, r: int, d: int, order: int = 30,
                       g: Optional[int] = None) -> CheckReport:
    """Recursion and closed formula agree coefficient by coefficient."""
    tau = Tau.parse(tau)
    if tau is Tau.COMPLEX:
        g = g if g is not None else kt.g
        rec = p_complex_recursive(g, r, d, order)
        closed = rf_to_series(p_complex_zagier(g, r, d), order)
        cid, inputs = f"differential/complex/g{g}/r{r}/d{d}", {"g": g, "r": r, "d": d}
    else:
        rec = p_tau_recursive(kt, tau, r, d, order)
        closed = rf_to_series(p_tau_closed(kt, tau, r, d), order)
        cid = f"differential/{tau.value}/g{kt.g}n{kt.n}a{kt.a}/r{r}/d{d}"
        inputs = {"kt": list(kt), "tau": tau.value, "r": r, "d": d}
    inputs["order"] = order
    return _report(cid, inputs, series_witness(closed.coeffs, rec.coeffs))


def differential_cases(genera: Iterable[int] = (2, 3, 4, 5), max_rank: int = 4):
    """(kt, tau, r, d, g) for every valid residue class; a is dropped since nothing depends on it."""
    for g in genera:
        for r in range(1, max_rank + 1):
            for d in range(r):
                yield None, Tau.COMPLEX, r, d, g
        seen = set()
        for kt in klein_types(g):
            key = kt.n
            if key in seen:
                continue
            seen.add(key)
            for tau in (Tau.REAL, Tau.QUAT):
                for r in range(1, max_rank + 1):
                    # P depends on d modulo 2r at most
                    for d in range(2 * r):
                        if not bundle_violations(kt, BundleType(r, d, tau)):
                            yield kt, tau, r, d, g


def differential_suite(order: int = 30, **kw) -> Iterator[CheckReport]:
    for kt, tau, r, d, g in differential_cases(**kw):
        yield check_differential(kt, tau, r, d, order, g=g)


# ---------------------------------------------------------------- suite

SUITES: dict[str, Callable[[], Iterable[CheckReport]]] = {
    "appendix": appendix_suite,
    "structural": structural_suite,
    "equal": equal_suite,
    "duality": duality_suite,
    "saveliev_wang": saveliev_wang_suite,
    "maximality": maximality_suite,
    "differential": differential_suite,
}


def run_suite(filters: Optional[Iterable[str]] = None) -> list[CheckReport]:
    """Run the named suites (all by default) in a fixed order."""
    names = list(SUITES) if not filters else list(filters)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    out: list[CheckReport] = []
    for name in SUITES:
        if name in names:
            out.extend(SUITES[name]())
    return out
