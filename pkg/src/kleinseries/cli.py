"""Command-line front end: series, compare, verify, table.

All output is exact.  Integers are printed as JSON integers and other
rationals as "p/q" strings; nothing is ever converted to a float.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from math import gcd
from typing import Optional, Sequence

from .engine import Method, Quantity, SeriesRequest, compute
from .exact import format_rat, rat
from .hn import InvalidType, KleinTopType, Tau
from .ratfunc import PoleError, RationalFn, rf_to_series
from .series import DEFAULT_ORDER
from .verification import (
    SUITES,
    run_suite,
    series_witness,
    total_betti_complex_moduli,
    total_betti_real_moduli,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _num(x):
    """JSON form of an exact rational."""
    s = format_rat(x)
    return int(s) if "/" not in s else s


def dumps(obj) -> str:
    """Canonical JSON: re-parsing and re-emitting gives identical bytes."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def _parse_range(text: str) -> list[int]:
    """'2-4' -> [2, 3, 4]; '2,5' -> [2, 5]; '3' -> [3]."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return sorted(set(out))


# ---------------------------------------------------------------- requests

def _request(args) -> SeriesRequest:
    tau = Tau.parse(args.tau)
    g = args.genus
    kt = None
    if tau is not Tau.COMPLEX:
        n = args.n
        a = args.a if args.a is not None else (0 if n == g + 1 else 1)
        kt = KleinTopType(g, n, a)
    return SeriesRequest(
        kt=kt,
        tau=tau,
        r=args.rank,
        d=args.degree,
        order=args.order,
        method=Method(args.method),
        quantity=Quantity(args.quantity),
        g=g,
    )


def _echo(req: SeriesRequest) -> dict:
    out = {"tau": req.tau.value, "genus": req.genus, "rank": req.r, "degree": req.d,
           "quantity": req.quantity.value}
    if req.kt is not None:
        out["n"], out["a"] = req.kt.n, req.kt.a
    return out


def _evaluate(req: SeriesRequest) -> tuple[dict, list]:
    """Compute, returning (output record, t-coefficients up to the order)."""
    t0 = time.perf_counter()
    value = compute(req)
    if isinstance(value, RationalFn):
        coeffs = rf_to_series(value, req.order).t_coefficients()
    else:
        coeffs = value.t_coefficients()
    ms = int((time.perf_counter() - t0) * 1000)
    record = {
        "request": _echo(req),
        "method": req.method.value,
        "order": req.order,
        "scale": 1,
        "coefficients": [_num(c) for c in coeffs],
        "runtime_ms": ms,
    }
    if isinstance(value, RationalFn):
        record["numerator"] = [_num(c) for c in value.num]
        record["denominator"] = [_num(c) for c in value.den]
    return record, coeffs


def _series_csv(record: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    num = record.get("numerator", [])
    den = record.get("denominator", [])
    w.writerow(["degree", "coefficient", "numerator", "denominator"])
    for k in range(max(len(record["coefficients"]), len(num), len(den))):
        w.writerow([
            k,
            record["coefficients"][k] if k < len(record["coefficients"]) else "",
            num[k] if k < len(num) else "",
            den[k] if k < len(den) else "",
        ])
    return buf.getvalue()


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands

def cmd_series(args) -> int:
    record, _ = _evaluate(_request(args))
    text = _series_csv(record) if args.format == "csv" else dumps(record) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_compare(args) -> int:
    req = _request(args)
    if args.golden:
        with open(args.golden, encoding="utf-8") as fh:
            golden = json.load(fh)
        expected = golden["coefficients"][: req.order + 1]
        _, got = _evaluate(req)
        witness = series_witness([rat(x) for x in expected], got)
        methods = [req.method.value, "golden"]
    else:
        if req.quantity is not Quantity.P:
            raise InvalidType("compare needs quantity P (Q and f have a single method)")
        rec = SeriesRequest(**{**req.__dict__, "method": Method.RECURSION})
        clo = SeriesRequest(**{**req.__dict__, "method": Method.CLOSED})
        _, a = _evaluate(clo)
        _, b = _evaluate(rec)
        witness = series_witness(a, b)
        methods = ["closed", "recursion"]
    record = {"request": _echo(req), "order": req.order, "methods": methods,
              "verdict": "match" if witness is None else "mismatch"}
    if witness is not None:
        record["witness"] = witness
    if args.format == "csv":
        text = "verdict,coefficient,expected,got\n"
        w = witness or {}
        text += f"{record['verdict']},{w.get('coefficient', '')},{w.get('expected', '')},{w.get('got', '')}\n"
    else:
        text = dumps(record) + "\n"
    _emit(text, args.out)
    return EXIT_OK if witness is None else EXIT_FAIL


def cmd_verify(args) -> int:
    filters = []
    for f in args.filter or []:
        filters.extend(p for p in f.split(",") if p)
    reports = run_suite(filters or None)
    text = "".join(r.to_json() + "\n" for r in reports)
    _emit(text, args.out)
    failed = sum(1 for r in reports if not r.passed)
    print(f"{len(reports)} checks, {failed} failed", file=sys.stderr)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def table_rows(genera: Sequence[int], ranks: Sequence[int]) -> list[dict]:
    rows = []
    for g in sorted(genera):
        for r in sorted(ranks):
            for d in range(1, r):
                if gcd(r, d) != 1:
                    continue
                c = total_betti_complex_moduli(g, r, d)
                real = total_betti_real_moduli(KleinTopType(g, g + 1, 0), r, d)
                rows.append({"g": g, "r": r, "d": d, "complex_total": c,
                             "real_total_scaled": real, "maximal": "yes" if c == real else "no"})
    return rows


def cmd_table(args) -> int:
    genera = _parse_range(args.genus)
    ranks = _parse_range(args.rank)
    if min(genera) < 2 or min(ranks) < 1:
        raise InvalidType("genus must be at least 2 and rank at least 1")
    rows = table_rows(genera, ranks)
    cols = ["g", "r", "d", "complex_total", "real_total_scaled", "maximal"]
    if args.format == "json":
        text = dumps([{k: (_num(v) if k != "maximal" else v) for k, v in row.items()} for row in rows]) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for row in rows:
            w.writerow([format_rat(row[k]) if k != "maximal" else row[k] for k in cols])
        text = buf.getvalue()
    _emit(text, args.out)
    return EXIT_OK if all(row["maximal"] == "yes" for row in rows) else EXIT_FAIL


# ---------------------------------------------------------------- parser

def _series_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--n", type=int, default=0, help="number of real circles (default 0)")
    p.add_argument("--a", type=int, default=None, help="orientability index (default: the valid one)")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--degree", type=int, default=0)
    p.add_argument("--tau", choices=["real", "quat", "complex"], required=True)
    p.add_argument("--method", choices=[m.value for m in Method], default="closed")
    p.add_argument("--quantity", choices=[q.value for q in Quantity], default="P",
                   help="P (default), or Q / f with --method product")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kleinseries", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="compute one series")
    _series_flags(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("compare", help="recursion vs closed formula, or a method vs a golden file")
    _series_flags(p)
    p.add_argument("--golden", default=None, help="JSON file with a 'coefficients' list")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="run the verification suite (JSON lines)")
    p.add_argument("--filter", action="append", help=f"suite name(s): {', '.join(SUITES)}")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="maximality table over ranges of genus and rank")
    p.add_argument("--genus", default="2-3", help="range such as 2-3")
    p.add_argument("--rank", default="2-4", help="range such as 2-4")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidType, PoleError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
