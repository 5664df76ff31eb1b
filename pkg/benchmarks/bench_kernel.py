"""Kronecker vs schoolbook integer polynomial multiplication.

Run:  python3 benchmarks/bench_kernel.py [--repeat 5]

Times the raw multiply on operands shaped like the ones the closed formulas
produce (powers of 1+t^j, products of cyclotomics), then one end-to-end closed
formula under each kernel.  Both kernels must give identical results; the
script aborts otherwise.
"""

import argparse
import time

from kleinseries import _zpoly as Z
from kleinseries import engine


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def operands():
    cases = []
    for e in (10, 40, 120):
        a = Z.power(Z.one_plus_power(1), e)
        b = Z.product([Z.power(Z.one_plus_power(2 * j - 1), e // 4 + 1) for j in range(1, 5)])
        cases.append((f"(1+t)^{e} x prod(1+t^odd)", a, b))
    phi = Z.product([Z.cyclotomic(m) for m in range(1, 60)])
    cases.append(("prod phi_m, m<60, squared", phi, phi))
    return cases


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print(f"{'operands':34s} {'deg':>6s} {'schoolbook':>12s} {'kronecker':>12s} {'speedup':>8s}")
    for name, a, b in operands():
        ts, rs = best_of(lambda: Z.mul_schoolbook(a, b), args.repeat)
        tk, rk = best_of(lambda: Z.mul_kronecker(a, b), args.repeat)
        assert rs == rk, f"kernels disagree on {name}"
        deg = len(a) + len(b) - 2
        print(f"{name:34s} {deg:6d} {ts * 1e3:10.2f}ms {tk * 1e3:10.2f}ms {ts / tk:7.1f}x")

    def closed():
        engine._p_complex_zagier.cache_clear()
        return engine.p_complex_zagier(5, 6, 1)

    results = {}
    for mode in ("schoolbook", "kronecker"):
        Z.set_kernel_mode(mode)
        results[mode] = best_of(closed, args.repeat)
    Z.set_kernel_mode("auto")
    assert results["schoolbook"][1] == results["kronecker"][1], "end-to-end results differ"
    ts, tk = results["schoolbook"][0], results["kronecker"][0]
    print(f"{'closed formula P_5(6,1)':34s} {'':6s} {ts * 1e3:10.2f}ms {tk * 1e3:10.2f}ms {ts / tk:7.1f}x")


if __name__ == "__main__":
    main()
