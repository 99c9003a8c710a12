"""Command-line front end.

Exit codes: 0 on a determinate answer, 1 on any error (one ``error: ...`` line
on stderr), 2 when a root count is undetermined.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from . import oracle, randlab
from .chamber import amoeba_boundary_samples, fan_for_support
from .intlin import SupportError, null_basis
from .polyparse import parse
from .rootcount import count_real
from .signlog import PrecisionCapExceeded
from .viro import canonical_viro

EXIT_OK, EXIT_ERROR, EXIT_UNDETERMINED = 0, 1, 2


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def parse_support(text: str) -> tuple:
    """``"0,404,405,808"`` or ``"(0,0),(1,0),(0,1)"`` into a tuple of points."""
    text = text.strip()
    if "(" in text:
        groups = re.findall(r"\(([^()]*)\)", text)
        if not groups or re.sub(r"\([^()]*\)|[\s,]", "", text):
            raise CliError(f"malformed support list {text!r}")
        try:
            return tuple(tuple(int(x) for x in g.split(",")) for g in groups)
        except ValueError:
            raise CliError(f"malformed support list {text!r}") from None
    try:
        return tuple((int(x),) for x in text.split(","))
    except ValueError:
        raise CliError(f"malformed support list {text!r}") from None


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise CliError(f"expected comma-separated integers, got {text!r}") from None


def _read_poly(text: str):
    if text == "-":
        text = sys.stdin.read()
    return parse(text)


def _sign_kw(args) -> dict:
    return {"cap": args.precision_cap} if args.precision_cap else {}


def _emit(args, payload: dict, rows: list | None = None, header: list | None = None) -> None:
    fmt = args.format
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        if rows is None:
            raise CliError("csv output is not available for this command")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        for k, v in payload.items():
            print(f"{k}: {v if not isinstance(v, (dict, list)) else json.dumps(v)}")


# -- subcommands -----------------------------------------------------------

def cmd_count(args) -> int:
    p = _read_poly(args.poly)
    rep = count_real(p, fallback=args.fallback_oracle, **_sign_kw(args))
    d = rep.to_json()
    rows = [[rep.positive, rep.negative, rep.zero_multiplicity,
             rep.method["positive"], rep.method["negative"]]]
    _emit(args, d, rows, ["positive", "negative", "zero_multiplicity",
                          "method_positive", "method_negative"])
    return EXIT_OK if rep.determinate else EXIT_UNDETERMINED


def cmd_cones(args) -> int:
    pts = parse_support(args.support)
    fan = fan_for_support(pts)
    radiants = [
        {"subset": list(r.labels), "direction": list(r.direction),
         "shift": [str(r.shift[0]), str(r.shift[1])]}
        for r in fan.radiants
    ]
    cones = [
        {"pair": [list(a.labels), list(b.labels)],
         "vertex": None if v is None else [str(v[0]), str(v[1])]}
        for (a, b), v in ((fan.cone(k), fan.vertices[k]) for k in range(len(fan)))
    ]
    payload = {
        "points": [list(p) for p in pts],
        "basis": [list(r) for r in fan.support.rows],
        "radiant": radiants,
        "nonradiant": [[i + 1 for i in g] for g in fan.nonradiant],
        "cones": cones,
        "count": len(fan),
    }
    rows = [[" ".join(map(str, r["subset"])), r["direction"][0], r["direction"][1],
             r["shift"][0], r["shift"][1]] for r in radiants]
    _emit(args, payload, rows, ["subset", "dx", "dy", "shift_x", "shift_y"])
    return EXIT_OK


def cmd_viro(args) -> int:
    if args.poly is not None:
        p = _read_poly(args.poly)
        if len(p) != 4:
            raise CliError(f"viro needs exactly four terms, got {len(p)}")
        pts, coeffs = tuple((e,) for e in p.exponents), p.coeffs
    else:
        if args.support is None or args.coeffs is None:
            raise CliError("give a polynomial or both --support and --coeffs")
        pts = parse_support(args.support)
        coeffs = [Fraction(c) for c in args.coeffs.split(",")]
    ls, vd = canonical_viro(fan_for_support(pts), coeffs, **_sign_kw(args))
    loc = ls.location
    payload = {
        "location": loc.kind,
        "pair": [list(x) for x in loc.pair_labels] if loc.pair_labels else None,
        "lift": list(ls.lift),
        **vd.to_json(),
    }
    rows = [[" ".join(str(i + 1) for i in c)] for c in vd.cells]
    _emit(args, payload, rows, ["cell"])
    return EXIT_OK if loc.is_unique else EXIT_UNDETERMINED


def cmd_amoeba(args) -> int:
    if args.samples < 1:
        raise CliError("--samples must be positive")
    sd = null_basis(parse_support(args.support))
    samples = amoeba_boundary_samples(sd, args.samples)
    if args.format == "csv" or args.format is None:
        args.format = "csv"
    rows = [[repr(x) for x in s] for s in samples]
    _emit(args, {"samples": [list(s) for s in samples]}, rows, ["t1", "t2", "y1", "y2"])
    return EXIT_OK


def cmd_oracle(args) -> int:
    p = _read_poly(args.poly)
    lo = Fraction(args.lo) if args.lo is not None else None
    hi = Fraction(args.hi) if args.hi is not None else None
    if args.oracle == "sturm":
        n = oracle.sturm_count(p, lo, hi, degree_cap=args.degree_cap)
    else:
        n = oracle.descartes_bisection_count(p, lo, hi, precision=args.precision)
    payload = {"oracle": args.oracle, "lo": args.lo, "hi": args.hi, "roots": n}
    _emit(args, payload, [[args.oracle, args.lo or "", args.hi or "", n]],
          ["oracle", "lo", "hi", "roots"])
    return EXIT_OK


def cmd_experiment(args) -> int:
    if args.format is None:
        args.format = "csv"
    if args.kind == "outer-frequency":
        exps = None
        if args.support:
            exps = tuple(p[0] for p in parse_support(args.support))
        res = randlab.run_outer_frequency(
            parse_int_list(args.M), args.trials, model=args.model, exponents=exps,
            max_degree=args.max_degree, seed=args.seed, check_oracle=not args.no_oracle,
        )
        for r in res:
            for t, poly, got, want in r.disagreements:
                print(f"disagreement M={r.M} trial={t} seed={args.seed} "
                      f"pipeline={got} oracle={want}: {poly}", file=sys.stderr)
        rows = [[r.M, r.trials, f"{r.unique_frac:.6f}", f"{r.agree_frac:.6f}"] for r in res]
        payload = {"results": [dict(zip(["M", "trials", "unique_frac", "agree_frac"], x)) for x in rows]}
        _emit(args, payload, rows, ["M", "trials", "unique_frac", "agree_frac"])
    else:
        rows_t = randlab.run_timing_scaling(
            parse_int_list(args.degrees), args.trials, height_bits=args.height_bits,
            seed=args.seed, method=args.method,
        )
        rows = [[r.degree, f"{r.median_ms:.3f}", f"{r.p90_ms:.3f}"] for r in rows_t]
        payload = {"results": [dict(zip(["degree", "median_ms", "p90_ms"], x)) for x in rows]}
        _emit(args, payload, rows, ["degree", "median_ms", "p90_ms"])
    return EXIT_OK


# -- argument parsing ------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default=None)
    common.add_argument("--precision-cap", type=int, default=None, metavar="BITS",
                        help="upper bound on working precision for log-form signs")
    common.add_argument("--seed", type=int, default=0)

    ap = _Parser(prog="sparseroots", description="Real roots of sparse polynomials.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count real roots")
    p.add_argument("poly", help='polynomial text, or "-" for stdin')
    p.add_argument("--fallback-oracle", action="store_true",
                   help="use an exact oracle when the chamber-cone method is inconclusive")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("cones", parents=[common], help="describe the chamber-cone fan of a support")
    p.add_argument("support")
    p.set_defaults(func=cmd_cones)

    p = sub.add_parser("viro", parents=[common], help="canonical Viro diagram")
    p.add_argument("poly", nargs="?")
    p.add_argument("--support")
    p.add_argument("--coeffs")
    p.set_defaults(func=cmd_viro)

    p = sub.add_parser("amoeba", parents=[common], help="sample the reduced discriminant amoeba")
    p.add_argument("support")
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=cmd_amoeba)

    p = sub.add_parser("oracle", parents=[common], help="exact real root count in (lo, hi]")
    p.add_argument("poly")
    p.add_argument("--oracle", choices=("sturm", "descartes"), default="sturm")
    p.add_argument("--lo")
    p.add_argument("--hi")
    p.add_argument("--degree-cap", type=int, default=oracle.DEFAULT_DEGREE_CAP)
    p.add_argument("--precision", type=int, default=256)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("experiment", parents=[common], help="randomized experiments")
    p.add_argument("kind", choices=("outer-frequency", "timing"))
    p.add_argument("--M", default="8,16,32,64")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--model", choices=randlab.MODELS, default="integer")
    p.add_argument("--support", help="fixed univariate support, e.g. 0,404,405,808")
    p.add_argument("--max-degree", type=int, default=60)
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--degrees", default="1000,1000000,1000000000")
    p.add_argument("--height-bits", type=int, default=16)
    p.add_argument("--method", choices=("chamber", "sturm"), default="chamber")
    p.set_defaults(func=cmd_experiment)
    return ap


def _validate(args) -> None:
    if args.precision_cap is not None and args.precision_cap < 1:
        raise CliError("--precision-cap must be positive")


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        try:
            args = ap.parse_args(argv)
        except SystemExit as e:  # --help
            return EXIT_ERROR if e.code else EXIT_OK
        _validate(args)
        if args.format is None and args.command in ("count", "cones", "viro", "oracle"):
            args.format = "json"
        return args.func(args)
    except (CliError, ValueError, ArithmeticError, SupportError, PrecisionCapExceeded,
            oracle.DegreeCapExceeded, oracle.NeedsMorePrecision) as e:
        msg = " ".join(str(e).split()) or type(e).__name__
        print(f"error: {type(e).__name__}: {msg}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
