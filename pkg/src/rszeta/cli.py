"""Command-line driver: evaluate functions, run verification suites, compare series.

Exit codes: 0 success, 1 an identity failed, 2 usage or schema error,
3 numerical infeasibility (infeasible contour, pole, non-convergence).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import mellin, special, whittaker, zeta
from .errors import (DomainError, InfeasibleContour, InvalidPartition, NonConvergence,
                     PoleError, UnsupportedRank)
from .mb import QuadPolicy
from .report import cvalue
from .suites import SUITES, run_suites
from .unramified import euler_product_series, unramified_zeta_series

NUMERIC_ERRORS = (InfeasibleContour, PoleError, NonConvergence)
USAGE_ERRORS = (DomainError, UnsupportedRank, InvalidPartition, ValueError)

COMPLEX_HELP = ('complex numbers are written "re" or "re+imj" (for example 0.5 or 1.2-0.3j); '
                'vectors are comma-separated; a value starting with "-" must be attached '
                'with "=", as in --a=-0.3,0.3')


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    try:
        return complex(text.strip().replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")


def parse_vector(text: str) -> list:
    return [parse_complex(x) for x in text.split(",") if x.strip()]


def parse_positive_vector(text: str) -> list:
    out = []
    for x in text.split(","):
        v = float(x)
        if not v > 0:
            raise argparse.ArgumentTypeError("torus coordinates must be positive")
        out.append(v)
    return out


def load_config(path: str | None) -> QuadPolicy:
    """QuadPolicy from {quadrature: {T, nodes, rule}, tolerances: {d1, d2, d3}}."""
    base = QuadPolicy(check=True)
    if path is None:
        return base
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}")
    if not isinstance(cfg, dict) or set(cfg) - {"quadrature", "tolerances"}:
        raise UsageError("config keys are 'quadrature' and 'tolerances'")
    q = cfg.get("quadrature", {}) or {}
    tl = cfg.get("tolerances", {}) or {}
    if not isinstance(q, dict) or set(q) - {"T", "nodes", "rule"}:
        raise UsageError("quadrature keys are T, nodes and rule")
    if not isinstance(tl, dict) or set(tl) - {"d1", "d2", "d3"}:
        raise UsageError("tolerance keys are d1, d2 and d3")
    try:
        return QuadPolicy.from_config(cfg, base)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid config: {exc}")


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.target} needs " + ", ".join("--" + m for m in missing))


def evaluate(args, quad: QuadPolicy):
    """The value requested by `rszeta eval`."""
    t = args.target
    if t == "gamma_r":
        _need(args, "s")
        return special.gamma_r(args.s[0])
    if t == "bessel_k":
        _need(args, "nu", "x")
        return special.bessel_k(args.nu, args.x)
    if t == "u":
        _need(args, "a", "s")
        if args.n is not None and len(args.a) != args.n:
            raise UsageError("--a must have n entries")
        return mellin.u_transform(args.a, args.s, quad)
    if t == "v":
        _need(args, "b", "s")
        return mellin.v_transform(args.b, args.s, quad)
    if t == "whittaker":
        _need(args, "y")
        route = args.route
        if args.b is not None:
            fn = whittaker.whittaker_b_direct if route == "direct" else whittaker.whittaker_b_mellin
            return fn(args.b, args.y) if route == "direct" else fn(args.b, args.y, quad)
        _need(args, "a")
        fn = whittaker.whittaker_a_direct if route == "direct" else whittaker.whittaker_a_mellin
        return fn(args.a, args.y) if route == "direct" else fn(args.a, args.y, quad)
    if t == "zeta_gl":
        _need(args, "n", "m", "a", "ap", "s")
        return zeta.zeta_gl(args.n, args.m, args.a, args.ap, args.s[0], quad)
    if t == "zeta_so":
        _need(args, "ell", "n", "a", "b", "s")
        return zeta.zeta_so(args.ell, args.n, args.a, args.b, args.s[0], quad)
    if t == "l_factor":
        _need(args, "a", "s")
        if args.b is not None:
            return zeta.l_factor_so(args.a, args.b, args.s[0])
        _need(args, "ap")
        return zeta.l_factor_gl(args.a, args.ap, args.s[0])
    raise UsageError(f"unknown target {t}")


def cmd_eval(args, out) -> int:
    quad = load_config(args.config)
    value = evaluate(args, quad)
    out.write(json.dumps(cvalue(value), sort_keys=True) + "\n")
    return 0


CSV_FIELDS = ["identity_id", "pass", "rel_error", "abs_error", "threshold", "lhs", "rhs",
              "parameters", "error", "seed"]


def _cell(v):
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return "" if v is None else v


def write_reports(reports, fmt: str, out, timing: bool):
    if fmt == "jsonl":
        for r in reports:
            out.write(json.dumps(r.to_dict(include_timing=timing), sort_keys=True) + "\n")
        return
    fields = CSV_FIELDS + (["runtime_ms"] if timing else [])
    w = csv.DictWriter(out, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in reports:
        d = r.to_dict(include_timing=timing)
        w.writerow({k: _cell(d.get(k)) for k in fields})


def cmd_verify(args, out) -> int:
    quad = load_config(args.config)
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    for name in args.suite:
        if name != "all" and name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    result = run_suites(args.suite, seed=args.seed, quad=quad, jobs=args.jobs, tol=args.tol)
    fmt = args.format or ("csv" if args.out and args.out.endswith(".csv") else "jsonl")
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_reports(result.reports, fmt, fh, args.timing)
    else:
        write_reports(result.reports, fmt, out, args.timing)
    failed = sum(not r.passed for r in result.reports)
    print(f"{len(result.reports)} reports, {failed} failed, exit {result.exit_code}",
          file=sys.stderr)
    return result.exit_code


def cmd_series(args, out) -> int:
    left = unramified_zeta_series(args.ell, args.n, args.N)
    right = euler_product_series(args.ell, args.n, args.N)
    mismatch = left.first_mismatch(right)
    summary = {"identical": left == right, "first_mismatch_degree": mismatch,
               "terms_per_degree": [len(c) for c in left.coeffs],
               "digest_zeta_series": left.digest(), "digest_euler_product": right.digest()}
    if args.format == "json":
        doc = {"ell": args.ell, "n": args.n, "N": args.N, "zeta_series": left.to_json(),
               "euler_product": right.to_json(), "diff": summary}
        out.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["series", "degree", "exps", "num", "den"])
        for name, ser in (("zeta_series", left), ("euler_product", right)):
            for k, terms in enumerate(ser.to_json()["coefficients"]):
                for term in terms:
                    w.writerow([name, k, " ".join(map(str, term["exps"])), term["num"], term["den"]])
        print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    return 0 if summary["identical"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rszeta",
        description="Archimedean and unramified Rankin-Selberg zeta integrals: evaluation "
                    "and identity verification.",
        epilog="Exit codes: 0 ok, 1 identity failure, 2 usage error, 3 numerical infeasibility. "
               + COMPLEX_HELP)
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate one quantity and print it as JSON {re, im}",
                       epilog=COMPLEX_HELP)
    e.add_argument("target", choices=["gamma_r", "bessel_k", "whittaker", "u", "v",
                                       "zeta_gl", "zeta_so", "l_factor"])
    e.add_argument("--s", type=parse_vector, help="s (a vector for u and v)")
    e.add_argument("--a", type=parse_vector, help="GL spectral parameter a")
    e.add_argument("--ap", type=parse_vector, help="GL spectral parameter a'")
    e.add_argument("--b", type=parse_vector, help="SO spectral parameter b")
    e.add_argument("--n", type=int)
    e.add_argument("--m", type=int)
    e.add_argument("--ell", type=int, choices=[-1, 0, 1])
    e.add_argument("--nu", type=parse_complex, help="Bessel order")
    e.add_argument("--x", type=float, help="Bessel argument (positive)")
    e.add_argument("--y", type=parse_positive_vector, help="torus coordinates y_1,...,y_n")
    e.add_argument("--route", choices=["direct", "mellin"], default="direct")
    e.add_argument("--config", help="JSON quadrature configuration")

    v = sub.add_parser("verify", help="run identity suites and print one report per instance")
    v.add_argument("suite", nargs="+", help=f"one or more of {', '.join(SUITES)}, or all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--config", help='JSON: {"quadrature": {"T", "nodes", "rule"}, '
                                    '"tolerances": {"d1", "d2", "d3"}}')
    v.add_argument("--out", help="write reports to this file instead of stdout")
    v.add_argument("--format", choices=["jsonl", "csv"],
                   help="report format (default jsonl, or csv when --out ends in .csv)")
    v.add_argument("--jobs", type=int, default=1, help="parallel identity instances")
    v.add_argument("--tol", type=float, help="override the pass threshold of numeric identities")
    v.add_argument("--timing", action="store_true",
                   help="include runtime_ms (makes output run-dependent)")

    s = sub.add_parser("series", help="unramified zeta series against the Euler-factor product")
    s.add_argument("--ell", type=int, required=True, choices=[0, 1])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--N", type=int, default=8)
    s.add_argument("--format", choices=["json", "csv"], default="json")
    return p


COMMANDS = {"eval": cmd_eval, "verify": cmd_verify, "series": cmd_series}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"rszeta: error: {exc}", file=sys.stderr)
        return 2
    except NUMERIC_ERRORS as exc:
        print(f"rszeta: numerical infeasibility: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except USAGE_ERRORS as exc:
        print(f"rszeta: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # the reader went away (for example `| head`); nothing left to report
        sys.stderr.close()
        return 0


def run_capture(argv) -> tuple:
    """Run main() and return (exit code, stdout text); handy in tests."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
