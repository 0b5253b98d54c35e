"""Command-line front end.

Exit codes: 0 success, 2 parse or validation error, 3 repeated root or
inadmissible derivative chain, 4 oracle failure, 5 internal disagreement.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__
from .entire import (
    PRODUCT_KINDS,
    TrigPoly,
    abs_convergence_report,
    default_window,
    funny_order,
    partial_product,
    product_terms,
    trig_derivative,
)
from .errors import HyperpolyError, ParseError
from .fourier import classify_critical_points, telescoped_terms, verify_counting_identity
from .hyperbolicity import analyze
from .oracle import oracle_nonreal_count
from .parsing import format_polynomial, parse_polynomial
from .poly import Q, evaluate


def _rational_arg(text: str) -> Q:
    try:
        return Q(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _float_arg(text: str) -> float:
    return float(_rational_arg(text))


def _read_input(args) -> "Poly":
    if args.input is not None:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {args.input}: {exc.strerror}") from None
    else:
        text = args.coeffs
    return parse_polynomial(text.strip())


def _emit_json(obj, out) -> None:
    json.dump(obj, out, sort_keys=True, indent=2)
    out.write("\n")


def cmd_analyze(args, out) -> int:
    f = _read_input(args)
    report = analyze(f).to_dict()
    report["polynomial"] = format_polynomial(f)
    if args.oracle:
        report["oracle_nonreal"] = oracle_nonreal_count(f, args.imag_tol)
    _emit_json(report, out)
    return 0


def cmd_fourier(args, out) -> int:
    f = _read_input(args)
    points = classify_critical_points(f)
    identity = verify_counting_identity(f)
    terms = telescoped_terms(f)
    _emit_json({
        "polynomial": format_polynomial(f),
        "critical_points": [p.to_dict() for p in points],
        "counting_identity": identity.to_dict(),
        "telescoped": {"K_terms": terms, "nonreal_count": 2 * sum(terms)},
    }, out)
    return 0


def cmd_sample(args, out) -> int:
    f = _read_input(args)
    if args.points < 2:
        raise ParseError("--points must be at least 2")
    if args.deriv < 0:
        raise ParseError("--deriv must be nonnegative")
    g = f.derivative(args.deriv)
    lo, hi = args.lo, args.hi
    rows = []
    for i in range(args.points):
        x = lo + (hi - lo) * Q(i, args.points - 1)
        rows.append((float(x), float(evaluate(g, x))))
    _emit_rows(rows, args.format, out)
    return 0


def _emit_rows(rows, fmt, out) -> None:
    if fmt == "json":
        _emit_json([{"x": x, "value": v} for x, v in rows], out)
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["x", "value"])
    for x, v in rows:
        writer.writerow([repr(x), repr(v)])


def cmd_funny_order(args, out) -> int:
    window = None if args.lo is None else (args.lo, args.hi)
    d_star = funny_order(args.a, args.max_order, window, args.samples)
    _emit_json({"a": args.a, "d_star": d_star}, out)
    return 0


def cmd_entire_sample(args, out) -> int:
    T = TrigPoly.family(args.a)
    for _ in range(args.deriv):
        T = trig_derivative(T)
    lo, hi = default_window(args.a) if args.lo is None else (args.lo, args.hi)
    xs = np.linspace(lo, hi, args.points)
    _emit_rows(list(zip(xs.tolist(), T(xs).tolist())), args.format, out)
    return 0


def cmd_product(args, out) -> int:
    value = partial_product(args.kind, args.z, args.terms)
    result = {"kind": args.kind, "z": args.z, "terms": args.terms,
              "value": value.value, "zero_at": value.zero_at}
    if args.terms >= 1000:
        report = abs_convergence_report(args.kind, args.z, args.terms)
        result.update(abs_sum=report.partial_abs_sum, growth_class=report.growth_class,
                      verdict=report.verdict)
    else:
        j = np.arange(1, args.terms + 1)
        result.update(abs_sum=float(np.abs(product_terms(args.kind, args.z, j)).sum()),
                      growth_class=None, verdict="undetermined")
    _emit_json(result, out)
    return 0


def _add_input(p) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="PATH", help="file with the coefficient text or JSON")
    src.add_argument("--coeffs", metavar="TEXT", help="ascending coefficients, e.g. '1,-3/2,0,2'")


def _add_window(p) -> None:
    p.add_argument("--from", dest="lo", type=_float_arg, default=None)
    p.add_argument("--to", dest="hi", type=_float_arg, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperpoly",
        description="Decide whether a real polynomial has only real, distinct roots.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="three-way verdict and funny-business ledger (JSON)")
    _add_input(p)
    p.add_argument("--oracle", action="store_true", help="also run the floating-point oracle")
    p.add_argument("--imag-tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("fourier", help="critical points and Fourier multiplicities (JSON)")
    _add_input(p)
    p.set_defaults(func=cmd_fourier)

    p = sub.add_parser("sample", help="(x, f^(D)(x)) rows for plotting")
    _add_input(p)
    p.add_argument("--from", dest="lo", type=_rational_arg, required=True)
    p.add_argument("--to", dest="hi", type=_rational_arg, required=True)
    p.add_argument("--points", type=int, default=201)
    p.add_argument("--deriv", type=int, default=0)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("entire", help="experiments with cos(az)(z^2 + 1/4)")
    esub = p.add_subparsers(dest="entire_command", required=True)
    q = esub.add_parser("funny-order", help="first derivative order with funny business")
    q.add_argument("--a", type=_float_arg, required=True)
    q.add_argument("--max-order", type=int, default=64)
    q.add_argument("--samples", type=int, default=4096)
    _add_window(q)
    q.set_defaults(func=cmd_funny_order)
    q = esub.add_parser("sample", help="(x, T^(n)(x)) rows, normalised derivative")
    q.add_argument("--a", type=_float_arg, required=True)
    q.add_argument("--deriv", type=int, default=0)
    q.add_argument("--points", type=int, default=1001)
    q.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_window(q)
    q.set_defaults(func=cmd_entire_sample)

    p = sub.add_parser("product", help="partial infinite product and absolute convergence")
    p.add_argument("--kind", choices=PRODUCT_KINDS, required=True)
    p.add_argument("--z", type=_float_arg, required=True)
    p.add_argument("--terms", type=int, required=True)
    p.set_defaults(func=cmd_product)
    return parser


def _validate(args, parser) -> None:
    lo, hi = getattr(args, "lo", None), getattr(args, "hi", None)
    if (lo is None) != (hi is None):
        parser.error("--from and --to must be given together")
    if lo is not None and not lo < hi:
        parser.error("--from must be smaller than --to")
    if getattr(args, "terms", 1) < 1:
        parser.error("--terms must be positive")
    if getattr(args, "a", 1.0) <= 0:
        parser.error("--a must be positive")


def _glue_coeffs(argv):
    # "--coeffs -1,0,1" would otherwise be read as an unknown option
    argv = list(sys.argv[1:] if argv is None else argv)
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--coeffs" and i + 1 < len(argv):
            out.append(f"--coeffs={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(_glue_coeffs(argv))
    _validate(args, parser)
    try:
        return args.func(args, out)
    except HyperpolyError as exc:
        print(f"hyperpoly: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"hyperpoly: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    try:
        code = main()
        sys.stdout.flush()
    except BrokenPipeError:
        # reader went away (e.g. piped into head); not an error of ours
        # point stdout at devnull so the interpreter's final flush stays quiet
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 0
    sys.exit(code)
