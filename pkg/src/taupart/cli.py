"""Command-line interface: ``taupart <subcommand> ...``.

Exit status is 0 on success, 1 when a verification or cross-check fails
and 2 on usage errors. JSON output renders every big integer as a decimal
string. Timings from ``verify`` go to stderr so stdout stays byte-stable.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from . import graphs, newton, partitions, series
from .ramanujan import METHODS, tau, tau_cross_check, tau_partition_sum
from .numtheory import sigma

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# Largest n_max each verify suite will run to; larger requests are clamped.
SUITE_CAPS = {"tau": 40, "sylvester": 40, "aut": 9, "series": 1000, "newton": 14}

NAMED_FUNCTIONS: dict[str, Callable[[int], int]] = {
    "one": lambda k: 1,
    "identity": lambda k: k,
    "sigma": sigma,
    "neg24sigma": lambda k: -24 * sigma(k),
}


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None = None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonnegative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _partition_arg(text: str) -> partitions.Partition:
    try:
        return partitions.parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# ---------------------------------------------------------------- commands


def cmd_tau(args) -> int:
    n = args.n
    if args.method == "all":
        values = {}
        for name, fn in METHODS.items():
            if name == "bko" and n < 2:
                continue
            values[name] = tau_partition_sum(n, args.threads) if name == "partition_sum" else fn(n)
        agree = len(set(values.values())) == 1
        if args.format == "json":
            _emit(_dump({"n": n, "values": {k: str(v) for k, v in values.items()}, "agreement": agree}))
        else:
            for name, v in values.items():
                _emit(f"{name}: {v}\n")
            _emit(f"agreement={'true' if agree else 'false'}\n")
        if not agree:
            print(f"error: methods disagree on tau({n})", file=sys.stderr)
            return EXIT_FAIL
        return EXIT_OK
    if args.method == "bko" and n < 2:
        raise UsageError("method bko needs n >= 2")
    if args.method == "partition_sum":
        value = tau_partition_sum(n, args.threads)
    else:
        value = tau(n, args.method)
    if args.format == "json":
        _emit(_dump({"n": n, "method": args.method, "tau": str(value)}))
    else:
        _emit(f"{value}\n")
    return EXIT_OK


def cmd_zlambda(args) -> int:
    lam = args.partition
    zl = partitions.z(lam)
    if args.format == "json":
        _emit(_dump({"partition": list(lam.parts), "z": str(zl)}))
    else:
        _emit(f"{zl}\n")
    return EXIT_OK


def cmd_partitions(args) -> int:
    if args.format == "json":
        rows = [
            {"partition": list(lam.parts), "z": str(partitions.z(lam))}
            for lam in partitions.enumerate_partitions(args.n)
        ]
        _emit(_dump({"n": args.n, "count": len(rows), "partitions": rows}))
    else:
        for lam in partitions.enumerate_partitions(args.n):
            _emit(f"{lam}\t{partitions.z(lam)}\n")
    return EXIT_OK


def cmd_graph(args) -> int:
    lam = args.partition
    g = graphs.build_graph(lam)
    if args.action == "aut-count":
        structural = graphs.structural_aut_count(lam)
        brute = None
        if g.size <= graphs.BRUTE_FORCE_CUTOFF:
            brute = graphs.brute_force_aut_count(g, threads=args.threads)
        if args.format == "json":
            _emit(_dump({
                "partition": list(lam.parts),
                "structural": str(structural),
                "brute": None if brute is None else str(brute),
            }))
        else:
            _emit(f"structural={structural}\n")
            _emit(f"brute={'skipped' if brute is None else brute}\n")
        if brute is not None and brute != structural:
            return EXIT_FAIL
    elif args.action == "symmetry":
        s = graphs.symmetry_number(lam)
        if args.format == "json":
            _emit(_dump({"partition": list(lam.parts), "symmetry": _rational(s)}))
        else:
            _emit(f"{_rational(s)}\n")
    elif args.action == "dot":
        _emit(graphs.export_dot(g), args.out)
    else:
        _emit(g.to_json() + "\n", args.out)
    return EXIT_OK


def _solver_function(args) -> Callable[[int], int]:
    if args.values is not None:
        try:
            vals = [int(t) for t in args.values.split(",")]
        except ValueError:
            raise UsageError(f"--values must be comma-separated integers, got {args.values!r}") from None
        if len(vals) < args.n:
            raise UsageError(f"--values gives F(1..{len(vals)}) but n = {args.n}")
        return lambda k: vals[k - 1]
    return NAMED_FUNCTIONS[args.function]


def cmd_solve(args) -> int:
    prob = newton.RecursionProblem(_solver_function(args), args.n)
    solvers = {
        "recursion": newton.recursion_solve,
        "partition_sum": lambda p: newton.partition_sum_solve(p, args.threads),
        "determinant": newton.determinant_solve,
    }
    chosen = list(solvers) if args.method == "all" else [args.method]
    results = {}
    for name in chosen:
        if name == "determinant" and args.n == 0:
            if args.method == "determinant":
                raise UsageError("the determinant form needs n >= 1")
            continue
        results[name] = solvers[name](prob)
    agree = len(set(results.values())) == 1
    if args.format == "json":
        payload = {"n": args.n, "values": {k: _rational(v) for k, v in results.items()}}
        if args.method == "all":
            payload["agreement"] = agree
        _emit(_dump(payload))
    elif args.method == "all":
        for name, v in results.items():
            _emit(f"{name}: {_rational(v)}\n")
        _emit(f"agreement={'true' if agree else 'false'}\n")
    else:
        _emit(f"{_rational(results[args.method])}\n")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_series(args) -> int:
    e = args.exponent
    if args.route == "product":
        s = series.product_expansion(lambda k: e, args.degree)
        _emit(s.to_json() + "\n")
        return EXIT_OK
    r = series.apostol_recursion(lambda k: k * e, args.degree, integral=True)
    _emit(series.TruncatedSeries(r, args.degree).to_json() + "\n")
    return EXIT_OK


# ------------------------------------------------------------------ verify


def _suite_tau(n: int, threads: int) -> str | None:
    report = tau_cross_check(n, threads)
    if report.disagreement:
        return str(report.disagreement)
    if report.multiplicative_failures:
        return f"multiplicativity fails for {report.multiplicative_failures}"
    return None


def _suite_sylvester(n: int, threads: int) -> str | None:
    for m in range(n + 1):
        total = sum((graphs.symmetry_number(lam) for lam in partitions.enumerate_partitions(m)), Fraction(0))
        if total != 1:
            return f"sum of 1/z over partitions of {m} is {total}"
    return None


def _suite_aut(n: int, threads: int) -> str | None:
    for m in range(1, n + 1):
        for lam in partitions.enumerate_partitions(m):
            brute = graphs.brute_force_aut_count(graphs.build_graph(lam), threads=threads)
            if not brute == graphs.structural_aut_count(lam) == partitions.z(lam):
                return f"G({lam}): brute={brute}, z={partitions.z(lam)}"
    return None


def _suite_series(n: int, threads: int) -> str | None:
    for e in (24, -1, 1):
        direct = series.product_expansion(lambda k: e, n).coefficients
        rec = series.apostol_recursion(lambda k: k * e, n, integral=True)
        if list(direct) != rec:
            return f"product and recursion differ for exponent {e}"
    counts = series.product_expansion(lambda k: -1, n).coefficients
    for m in range(min(n, 40) + 1):
        if counts[m] != sum(1 for _ in partitions.enumerate_partitions(m)):
            return f"p({m}) from the product disagrees with enumeration"
    return None


def _suite_newton(n: int, threads: int) -> str | None:
    rng = random.Random(0)
    for trial in range(20):
        vals = [rng.randint(-100, 100) for _ in range(n)]
        F = lambda k, vals=vals: vals[k - 1]
        for m in range(1, n + 1):
            prob = newton.RecursionProblem(F, m)
            a = newton.recursion_solve(prob)
            b = newton.partition_sum_solve(prob, threads)
            c = newton.determinant_solve(prob)
            if not a == b == c:
                return f"trial {trial}, n={m}: {a}, {b}, {c}"
    return None


SUITES = {
    "tau": _suite_tau,
    "sylvester": _suite_sylvester,
    "aut": _suite_aut,
    "series": _suite_series,
    "newton": _suite_newton,
}


def cmd_verify(args) -> int:
    names = [s.strip() for s in args.suites.split(",") if s.strip()]
    unknown = [s for s in names if s not in SUITES]
    if unknown or not names:
        raise UsageError(f"unknown suites {unknown}; choose from {sorted(SUITES)}")
    results = []
    failed = False
    for name in names:
        n = min(args.n_max, SUITE_CAPS[name])
        if name == "tau" and n < 2:
            raise UsageError("suite tau needs n-max >= 2")
        t0 = time.perf_counter()
        err = SUITES[name](n, args.threads)
        print(f"{name}: {time.perf_counter() - t0:.3f}s", file=sys.stderr)
        results.append({"suite": name, "n_max": n, "pass": err is None, "detail": err})
        failed = failed or err is not None
    if args.format == "json":
        _emit(_dump({"suites": results, "pass": not failed}))
    else:
        for r in results:
            line = f"{r['suite']} (n_max={r['n_max']}): {'PASS' if r['pass'] else 'FAIL'}"
            if r["detail"]:
                line += f" - {r['detail']}"
            _emit(line + "\n")
    return EXIT_FAIL if failed else EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="taupart", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, threads=False):
        p.add_argument("--format", choices=["plain", "json"], default="plain")
        if threads:
            p.add_argument("--threads", type=_positive, default=1)

    p = sub.add_parser("tau", help="compute tau(n)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--method", choices=[*METHODS, "all"], default="recursion")
    common(p, threads=True)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("zlambda", help="the invariant z of a partition")
    p.add_argument("--partition", type=_partition_arg, required=True)
    common(p)
    p.set_defaults(func=cmd_zlambda)

    p = sub.add_parser("partitions", help="list partitions of n with their z")
    p.add_argument("--n", type=_nonnegative, required=True)
    common(p)
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("graph", help="the partition graph G(lambda)")
    p.add_argument("--partition", type=_partition_arg, required=True)
    p.add_argument("--action", choices=["aut-count", "symmetry", "dot", "json"], default="aut-count")
    p.add_argument("--out", help="write dot/json output to this file")
    common(p, threads=True)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("solve", help="solve n r(n) = sum F(k) r(n-k)")
    p.add_argument("--n", type=_nonnegative, required=True)
    p.add_argument("--function", choices=sorted(NAMED_FUNCTIONS), default="sigma")
    p.add_argument("--values", help="explicit F(1),F(2),... overriding --function")
    p.add_argument("--method", choices=["recursion", "partition_sum", "determinant", "all"], default="all")
    common(p, threads=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("series", help="expand prod (1 - x^k)^e as JSON")
    p.add_argument("--exponent", type=int, required=True)
    p.add_argument("--degree", type=_nonnegative, required=True)
    p.add_argument("--route", choices=["product", "recursion"], default="product")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument("--n-max", type=_positive, default=20)
    p.add_argument("--suites", default=",".join(SUITES))
    common(p, threads=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"taupart: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
