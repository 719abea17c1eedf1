"""Command-line interface: gamma(d, a), tables, prime sums and the applications."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone
from decimal import Decimal
from fractions import Fraction

from mpmath import mpf

from .apps import (
    appendix_gamma,
    empirical_estimate,
    euler_kronecker_q7,
    serre_constants,
    shanks_constants,
)
from .arith import ResidueClass, units
from .cache import CacheRecord, ResultCache
from .errors import CertificationError, DomainError
from .gamma_ap import gamma_da
from .numeric import error_string, truncate_decimal
from .primesums import PrimeSumSpec, alternating_log_sum, log_zeta_da, prime_sum

EXTRA_DIGITS = 10
EXIT_DOMAIN = 2
EXIT_CERTIFICATION = 3
EXIT_UNMET = 4


def _now() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def compute_record(d: int, a: int, digits: int, engine: str = "auto") -> CacheRecord:
    """Compute gamma(d, a) at digits + EXTRA_DIGITS and package it as a cache record."""
    rc = ResidueClass(d, a)
    work = digits + EXTRA_DIGITS
    if engine == "appendix":
        r = appendix_gamma(rc.d, rc.a, work)
        value, err, params, label = r.value, r.error, None, "appendix"
    else:
        r = gamma_da(rc.d, rc.a, work, engine=engine)
        value, err, label = r.value, r.certified_error, r.engine
        params = None if r.budget is None else {"P": r.budget.P, "K": r.budget.K, "J": r.budget.J}
    return CacheRecord(rc.d, rc.a, work, truncate_decimal(value, work), error_string(err),
                       params, label, _now())


def _truncate_string(value: str, digits: int) -> str:
    head, _, tail = value.partition(".")
    return f"{head}.{tail[:digits]}" if digits else head


def _lookup_or_compute(d, a, digits, engine, cache):
    rec = cache.lookup(d, a, digits) if cache is not None else None
    source = "cache"
    if rec is None or (engine != "auto" and rec.engine != _engine_label(engine)):
        rec = compute_record(d, a, digits, engine)
        source = "computed"
        if cache is not None:
            cache.append(rec)
    return rec, source


def _engine_label(engine: str) -> str:
    return {"closed": "closed-form"}.get(engine, engine)


def _row_job(args):
    d, digits, engine = args
    return [compute_record(d, a, digits, engine) for a in units(d)]


# -- subcommands

def cmd_gamma(ns) -> int:
    cache = None if ns.no_cache else ResultCache(ns.cache_path)
    t0 = time.perf_counter()
    rc = ResidueClass(ns.d, ns.a)
    rec, source = _lookup_or_compute(rc.d, rc.a, ns.digits, ns.engine, cache)
    value = _truncate_string(rec.value, ns.digits)
    if ns.format == "json":
        print(json.dumps({"d": rec.d, "a": rec.a, "digits": ns.digits, "value": value,
                          "error": rec.error, "params": rec.params, "engine": rec.engine},
                         sort_keys=True))
    elif ns.format == "csv":
        print("d,a,value,error,engine")
        print(f"{rec.d},{rec.a},{value},{rec.error},{rec.engine}")
    else:
        print(f"gamma({rec.d},{rec.a}) = {value}")
        print(f"certified error < {rec.error}")
        if rec.params:
            print(f"budget P={rec.params['P']} K={rec.params['K']} J={rec.params['J']}")
        print(f"engine {rec.engine}")
    print(f"[{source} in {time.perf_counter() - t0:.2f}s]", file=sys.stderr)
    return 0 if Decimal(rec.error) < Decimal(10) ** -ns.digits else EXIT_UNMET


def cmd_table(ns) -> int:
    if ns.dmax < 3:
        raise DomainError("--dmax must be at least 3")
    cache = None if ns.no_cache else ResultCache(ns.cache_path)
    rows: list[CacheRecord] = []
    todo = []
    for d in range(1, ns.dmax + 1):
        recs = [cache.lookup(d, a, ns.digits) if cache else None for a in units(d)]
        if all(recs):
            rows.extend(recs)
        else:
            todo.append(d)
    if todo:
        jobs = [(d, ns.digits, ns.engine) for d in todo]
        if ns.threads > 1:
            with ProcessPoolExecutor(max_workers=ns.threads) as pool:
                computed = list(pool.map(_row_job, jobs))
        else:
            computed = [_row_job(j) for j in jobs]
        for recs in computed:
            rows.extend(recs)
            if cache is not None:
                for r in recs:
                    cache.append(r)
    rows.sort(key=lambda r: (r.d, r.a))
    out = [(r.d, r.a, _truncate_string(r.value, ns.digits), r.error, r.engine) for r in rows]
    if ns.format == "json":
        print(json.dumps([{"d": d, "a": a, "value": v, "error": e, "engine": g} for d, a, v, e, g in out],
                         indent=1))
    elif ns.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d", "a", "value", "error", "engine"])
        w.writerows(out)
        sys.stdout.write(buf.getvalue())
    else:
        width = max(len(v) for _, _, v, _, _ in out)
        rule = "-" * (width + 12)
        prev = None
        for d, a, v, _, _ in out:
            if d != prev:
                print(rule)
            print(f"{d if d != prev else '':>3} {a:>3}  {v:>{width}}")
            prev = d
        print(rule)
    bad = [r for r in rows if Decimal(r.error) >= Decimal(10) ** -ns.digits]
    return EXIT_UNMET if bad else 0


def cmd_sum(ns) -> int:
    s = Fraction(ns.s)
    if ns.kind in ("logzeta", "altlog"):
        fn = log_zeta_da if ns.kind == "logzeta" else alternating_log_sum
        r = fn(ns.d, ns.a, s, ns.digits + EXTRA_DIGITS)
    else:
        d = 1 if ns.kind == "a" else ns.d
        spec = PrimeSumSpec(ns.kind, s, ns.digits + EXTRA_DIGITS, d, ns.a if d > 1 else 1, Fraction(ns.u))
        r = prime_sum(spec)
    print(truncate_decimal(r.value, ns.digits))
    print(f"certified error < {error_string(r.error)}")
    return 0 if r.error < mpf(10) ** -ns.digits else EXIT_UNMET


def cmd_apps(ns) -> int:
    if ns.name == "empirical":
        est = empirical_estimate(ns.d, ns.a, float(ns.x))
        cache = None if ns.no_cache else ResultCache(ns.cache_path)
        rec, _ = _lookup_or_compute(ns.d, ns.a, 20, "auto", cache)
        ref = float(Decimal(rec.value))
        print(f"estimate({ns.d},{ns.a}; x={int(float(ns.x))}) = {est:.12f}")
        print(f"gamma({ns.d},{ns.a}) = {_truncate_string(rec.value, 20)}")
        print(f"distance = {abs(est - ref):.3e} (uncertified)")
        return 0
    fn = {"shanks": shanks_constants, "q7": euler_kronecker_q7, "serre": serre_constants}[ns.name]
    rep = fn(ns.digits + EXTRA_DIGITS)
    for key, val in rep.values.items():
        print(f"{key} = {truncate_decimal(val, ns.digits)}")
    print(f"certified error < {error_string(rep.certified_error)}")
    return 0 if rep.certified_error < mpf(10) ** -ns.digits else EXIT_UNMET


# -- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=40, help="decimal digits to print (default 40)")
    common.add_argument("--cache-path", default=None, help="result cache file (default: $EULERAP_CACHE or user data dir)")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    common.add_argument("--threads", type=int, default=1, help="worker processes for table rows")
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = argparse.ArgumentParser(prog="eulerap", description="Euler constants of primes in arithmetic progressions.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gamma", parents=[common], help="gamma(d, a) with a certified error bound")
    g.add_argument("d", type=int)
    g.add_argument("a", type=int)
    g.add_argument("--engine", choices=("auto", "general", "closed", "appendix"), default="auto")
    g.set_defaults(func=cmd_gamma)

    t = sub.add_parser("table", parents=[common], help="gamma(d, a) for every primitive class with d <= dmax")
    t.add_argument("--dmax", type=int, default=12)
    t.add_argument("--engine", choices=("auto", "general"), default="auto")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("sum", parents=[common], help="certified prime sums")
    s.add_argument("kind", choices=("a", "b", "c", "d", "logzeta", "altlog"))
    s.add_argument("--d", type=int, default=1)
    s.add_argument("--a", type=int, default=1)
    s.add_argument("--s", required=True, help="exponent, integer or rational such as 3/2")
    s.add_argument("--u", default="0", help="numerator exponent for kind d")
    s.set_defaults(func=cmd_sum)

    a = sub.add_parser("apps", parents=[common], help="Shanks, Q(zeta_7)^+, d = 12 constants, sieve estimate")
    a.add_argument("name", choices=("shanks", "q7", "serre", "empirical"))
    a.add_argument("--d", type=int, default=1)
    a.add_argument("--a", type=int, default=1)
    a.add_argument("--x", default="1e8", help="sieve limit for the empirical estimate")
    a.set_defaults(func=cmd_apps)
    return p


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        if ns.digits < 1:
            raise DomainError("--digits must be positive")
        return ns.func(ns)
    except CertificationError as exc:
        print(f"error: certification failed: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATION
    except (DomainError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
