"""Command-line frontend: ``degbell {stirling,eval,verify,dobinski-demo}``.

Exit codes: 0 success / all identities pass, 1 verification failure,
2 usage, parse, pole or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .exact import LambdaPoly, format_rational, parse_rational
from .families import FAMILIES, FamilyParams, PoleError, dobinski_float, evaluate
from .series import DEFAULT_ORDER
from .stirling import SYMBOLIC, triangle
from .verify import MUTATIONS, ConfigError, SuiteConfig, run_suite, suite_json


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _lambda_arg(text: str):
    if text.strip().lower() in ("sym", "symbolic", "λ", "lambda"):
        return SYMBOLIC
    return _rational(text)


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


# --- triangles ---------------------------------------------------------------------


def _cell(value) -> str:
    if isinstance(value, LambdaPoly):
        return "[" + ",".join(value.to_strings()) + "]"
    return format_rational(value)


def _parse_cell(text: str):
    text = text.strip()
    if text.startswith("["):
        return LambdaPoly(parse_rational(t) for t in text[1:-1].split(","))
    return parse_rational(text)


def stirling_rows(n_max: int, r: int, lam) -> list[list]:
    tri = triangle(lam, r)
    return [list(tri.row(n)) for n in range(n_max + 1)]


def triangle_to_csv(rows: list[list]) -> str:
    width = len(rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n"] + [f"k={k}" for k in range(width)])
    for n, row in enumerate(rows):
        cells = [_cell(v) for v in row]
        writer.writerow([n] + cells + [""] * (width - len(cells)))
    return buf.getvalue()


def triangle_from_csv(text: str) -> list[list]:
    reader = csv.reader(io.StringIO(text))
    next(reader)
    return [[_parse_cell(c) for c in line[1:] if c != ""] for line in reader]


def triangle_to_json(rows: list[list], r: int, lam) -> str:
    doc = {
        "kind": "degenerate-r-stirling" if r else "degenerate-stirling",
        "r": r,
        "lambda": "symbolic" if lam is SYMBOLIC else format_rational(lam),
        "rows": [
            [v.to_strings() if isinstance(v, LambdaPoly) else format_rational(v) for v in row] for row in rows
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def triangle_from_json(text: str) -> list[list]:
    doc = json.loads(text)
    symbolic = doc["lambda"] == "symbolic"
    return [
        [LambdaPoly(parse_rational(t) for t in v) if symbolic else parse_rational(v) for v in row]
        for row in doc["rows"]
    ]


# --- subcommands -----------------------------------------------------------------------


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_stirling(args) -> int:
    rows = stirling_rows(args.nmax, args.r, args.lam)
    if args.format == "json":
        text = triangle_to_json(rows, args.r, args.lam)
    else:
        text = triangle_to_csv(rows)
    _emit(text, args.out)
    return 0


def _params(args) -> FamilyParams:
    return FamilyParams(n=args.n, lam=args.lam, x=args.x, y=args.y, r=args.r, k=args.k)


def cmd_eval(args) -> int:
    if args.lam is SYMBOLIC:
        raise UsageError("eval needs a rational --lambda")
    result = evaluate(args.family, _params(args))
    value = format_rational(result.value)
    if args.format == "json":
        doc = {
            "family": result.family,
            "value": value,
            "float": float(result.value),
            "params": {
                "n": args.n,
                "lambda": format_rational(args.lam),
                "x": format_rational(args.x),
                "y": format_rational(args.y),
                "r": args.r,
                "k": args.k,
            },
            "omitted_prefactor": result.omitted_prefactor,
        }
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    elif args.format == "csv":
        _emit(f"family,n,lambda,x,y,r,k,value\n{args.family},{args.n},{format_rational(args.lam)},"
              f"{format_rational(args.x)},{format_rational(args.y)},{args.r},{args.k},{value}\n", args.out)
    else:
        lines = [value]
        if args.float:
            lines.append(f"~ {float(result.value):.17g}")
        if result.omitted_prefactor:
            lines.append(f"note: normalized value; omitted prefactor {result.omitted_prefactor}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    cfg = SuiteConfig(
        seed=args.seed,
        samples=args.samples,
        n_max=args.nmax,
        m_max=args.nmax if args.m is None else args.m,
        r_max=args.r_max,
        order=args.order,
        mutation=args.inject_mutation,
    )
    try:
        cfg.validate()
    except ConfigError as exc:
        raise UsageError(str(exc)) from None
    reports = run_suite(cfg)
    text = suite_json(reports, cfg, timings=args.timings)
    summary = sys.stderr if args.out is None else sys.stdout
    for rep in reports:
        print(f"{rep.status.upper():4s} {rep.identity_id} ({rep.checks} checks)", file=summary)
    _emit(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


def cmd_dobinski_demo(args) -> int:
    if args.lam is SYMBOLIC:
        raise UsageError("dobinski-demo needs a rational --lambda")
    params = FamilyParams(n=args.n, lam=args.lam, x=args.x, y=args.y, r=args.r)
    try:
        trace = dobinski_float(params, K=args.K, tolerance=args.tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"{'K':>5s}  partial sum"]
    lines += [f"{k:5d}  {v:.17g}" for k, v in trace.partial_sums]
    lines.append(f"exact  {trace.exact:.17g}")
    lines.append(f"condition {trace.condition:.3e}")
    lines.append(f"relative delta {trace.rel_delta:.3e} ({'within' if trace.converged else 'outside'} {args.tol:g})")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if trace.converged else 1


# --- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="degbell", description="Exact degenerate Bell/Stirling computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def scalars(p, lam_symbolic=False):
        p.add_argument("--lambda", dest="lam", type=_lambda_arg if lam_symbolic else _rational, default=Fraction(1))
        p.add_argument("--x", type=_rational, default=Fraction(1))
        p.add_argument("--y", type=_rational, default=Fraction(1))

    p = sub.add_parser("stirling", help="degenerate (r-)Stirling triangle")
    p.add_argument("--nmax", type=_nonneg, default=6)
    p.add_argument("--r", type=_nonneg, default=0)
    p.add_argument("--lambda", dest="lam", type=_lambda_arg, default=SYMBOLIC,
                   help="rational value or 'sym' (default) for polynomials in lambda")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_stirling)

    p = sub.add_parser("eval", help="evaluate one family at exact parameters")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--n", type=_nonneg, required=True)
    scalars(p, lam_symbolic=True)
    p.add_argument("--r", type=_nonneg, default=0)
    p.add_argument("--k", type=_nonneg, default=1, help="Fubini order")
    p.add_argument("--float", action="store_true", help="also print a float rendering")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--seed", type=_nonneg, default=0)
    p.add_argument("--samples", type=_nonneg, default=50)
    p.add_argument("--nmax", type=_nonneg, default=6, help="bound for n (and m unless --m is given) in the recurrences")
    p.add_argument("--m", type=_nonneg, help="separate bound for m")
    p.add_argument("--r", dest="r_max", type=_nonneg, default=3, help="largest r")
    p.add_argument("--order", type=_nonneg, default=DEFAULT_ORDER, help="series truncation order")
    p.add_argument("--format", choices=("json",), default="json")
    p.add_argument("--out", help="write the JSON report here (default: stdout)")
    p.add_argument("--timings", action="store_true", help="include elapsed times (breaks byte-determinism)")
    p.add_argument("--inject-mutation", choices=MUTATIONS, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dobinski-demo", help="floating-point Dobinski partial sums")
    p.add_argument("--n", type=_nonneg, required=True)
    scalars(p)
    p.add_argument("--r", type=_nonneg, default=0)
    p.add_argument("--K", type=_nonneg, default=200, help="number of series terms")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dobinski_demo)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PoleError, ValueError) as exc:
        print(f"degbell: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
