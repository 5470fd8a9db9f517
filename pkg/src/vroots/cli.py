"""``vroots`` command line: roots, thom, table, sweep, modulus, check.

Exit codes: 0 success, 2 parse error, 3 precondition violation, 4 invariant
violation reported by ``check``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from vroots.analysis import modulus, thom_table
from vroots.checks import run_all
from vroots.parse import ParseError, parse_bivariate, parse_poly
from vroots.realalg import snap_rational
from vroots.virtual import RthTower, ThomTower, format_signs, parse_signs

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INVARIANT = 4

DEFAULT_PRECISION = 10
SWEEP_PRECISION = 9

ENTRY_FIELDS = ("key", "lo", "hi", "defining", "provenance", "decimal")


class Precondition(Exception):
    pass


def _decimal(x: Fraction, digits: int) -> str:
    """``x`` rounded half-even to ``digits`` places, as plain decimal text."""
    scaled = round(x * 10 ** digits)
    sign = "-" if scaled < 0 else ""
    body = str(abs(scaled)).rjust(digits + 1, "0")
    return f"{sign}{body[:-digits]}.{body[-digits:]}" if digits else f"{sign}{body}"


def _enclose(point, digits: int):
    """Enclosure of width ``10^-digits``; exact rationals collapse to a point."""
    enc = point.refine(Fraction(1, 10 ** digits))
    return snap_rational(enc, 10 ** (digits // 2))


def _entry(key: str, point, provenance, digits: int) -> dict:
    if not point.is_finite:
        text = repr(point)
        return dict(key=key, lo=text, hi=text, defining="", provenance=None, decimal=text)
    enc = _enclose(point, digits)
    return dict(
        key=key,
        lo=str(enc.lo),
        hi=str(enc.hi),
        defining=enc.defining.to_str(),
        provenance=provenance,
        decimal=_decimal((enc.lo + enc.hi) / 2, digits),
    )


def _monic(text: str):
    p = parse_poly(text)
    if p.degree < 1:
        raise Precondition(f"{text!r} has degree < 1")
    if not p.is_monic():
        raise Precondition(f"{text!r} is not monic in x")
    return p


def _render(doc: dict, fmt: str, columns) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    rows = doc["entries"]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow(["" if r[c] is None else r[c] for c in columns])
        return buf.getvalue()
    lines = [f"degree {doc['degree']} ({doc['family']})"]
    for r in rows:
        prov = "-" if r["provenance"] is None else r["provenance"]
        extra = "".join(f"  {c}={r[c]}" for c in columns if c not in ENTRY_FIELDS)
        lines.append(f"{r['key']:>12}  {r['decimal']:>20}  level {prov}  [{r['lo']}, {r['hi']}]{extra}")
    for k, v in doc.items():
        if k not in ("degree", "family", "entries"):
            lines.append(f"{k}: {v}")
    return "\n".join(lines) + "\n"


def cmd_roots(args) -> str:
    p = _monic(args.expr)
    rth = RthTower(p)
    entries = [_entry(str(r.rank), r.value, r.level, args.precision) for r in rth.roots()]
    doc = {"degree": p.degree, "family": "rth", "entries": entries}
    return _render(doc, args.format, ENTRY_FIELDS)


def _thom_entry(thom: ThomTower, code, digits: int) -> dict:
    root = thom.root(code)
    out = _entry(format_signs(code), root.value, root.level, digits)
    out["f_nonempty"] = thom.f_nonempty(code)
    out["u_nonempty"] = thom.u_nonempty(code)
    return out


def cmd_thom(args) -> str:
    p = _monic(args.expr)
    try:
        code = parse_signs(args.sigma, implicit_head=True)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if len(code) != p.degree:
        raise Precondition(f"sign string needs {p.degree - 1} characters for degree {p.degree}, got {len(code) - 1}")
    thom = ThomTower(p)
    doc = {"degree": p.degree, "family": "thom", "entries": [_thom_entry(thom, code, args.precision)]}
    return _render(doc, args.format, ENTRY_FIELDS + ("f_nonempty", "u_nonempty"))


def cmd_table(args) -> str:
    p = _monic(args.expr)
    table = thom_table(p)
    entries = []
    for row in table.rows:
        e = _entry(format_signs(row.code), row.root.value, row.root.level, args.precision)
        e["f_nonempty"] = row.f_nonempty
        e["u_nonempty"] = row.u_nonempty
        entries.append(e)
    doc = {
        "degree": p.degree,
        "family": "thom",
        "entries": entries,
        "distinct_count": table.distinct_count,
        "s_d": table.bound,
    }
    return _render(doc, args.format, ENTRY_FIELDS + ("f_nonempty", "u_nonempty"))


def sweep_samples(x_lo: Fraction, x_hi: Fraction, steps: int) -> list:
    if steps < 1:
        raise Precondition("steps must be >= 1")
    if steps == 1:
        return [x_lo]
    return [x_lo + k * (x_hi - x_lo) / (steps - 1) for k in range(steps)]


def sweep_rows(expr: str, x_lo, x_hi, steps: int, digits: int = SWEEP_PRECISION) -> list:
    """``(x, j, lo, hi)`` with exact rational enclosures of ``rho_{d,j}`` of each y-slice."""
    bi = parse_bivariate(expr)
    if not bi.is_y_monic():
        raise Precondition(f"{expr!r} is not monic in y")
    rows = []
    for x0 in sweep_samples(Fraction(x_lo), Fraction(x_hi), steps):
        rth = RthTower(bi.slice_at(x0))
        for j in range(1, rth.degree + 1):
            enc = _enclose(rth.value(j), digits)
            rows.append((x0, j, enc.lo, enc.hi))
    rows.sort(key=lambda r: (r[0], r[1]))
    return rows


def cmd_sweep(args) -> str:
    try:
        x_lo, x_hi = _rational(args.x_lo), _rational(args.x_hi)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    rows = sweep_rows(args.expr, x_lo, x_hi, args.steps, args.precision)
    if args.format == "json":
        doc = {
            "columns": ["x", "j", "lo", "hi"],
            "rows": [[str(x), j, str(lo), str(hi)] for x, j, lo, hi in rows],
        }
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "j", "lo", "hi"])
    for x, j, lo, hi in rows:
        w.writerow([x, j, lo, hi])
    return buf.getvalue()


def _rational(text: str) -> Fraction:
    if "." in text or "e" in text.lower():
        raise ValueError(f"{text!r}: write rationals as p/q")
    return Fraction(text)


def cmd_modulus(args) -> str:
    try:
        m, eps = _rational(args.M), _rational(args.eps)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    try:
        omega = modulus(m, eps, args.d)
    except ValueError as exc:
        raise Precondition(str(exc)) from None
    if args.format == "json":
        return json.dumps({"M": str(m), "eps": str(eps), "d": args.d, "omega": str(omega)}, indent=2) + "\n"
    if args.format == "csv":
        return f"M,eps,d,omega\n{m},{eps},{args.d},{omega}\n"
    return f"{omega}\n"


def cmd_check(args):
    p = _monic(args.expr)
    report = run_all(p, seed=args.seed)
    failed = any(report.values())
    if args.format == "json":
        doc = {
            "degree": p.degree,
            "seed": args.seed,
            "checks": [{"name": k, "status": "FAIL" if v else "PASS", "violations": v} for k, v in report.items()],
            "status": "FAIL" if failed else "PASS",
        }
        text = json.dumps(doc, indent=2) + "\n"
    elif args.format == "csv":
        text = "name,status,violations\n" + "".join(
            f"{k},{'FAIL' if v else 'PASS'},{len(v)}\n" for k, v in report.items()
        )
    else:
        lines = [f"{'FAIL' if v else 'PASS'}  {k}" + "".join(f"\n      {m}" for m in v) for k, v in report.items()]
        lines.append("FAIL" if failed else "PASS")
        text = "\n".join(lines) + "\n"
    return text, (EXIT_INVARIANT if failed else EXIT_OK)


def _precision(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"precision must be an integer, got {text!r}") from None
    if not 1 <= n <= 1000:
        raise argparse.ArgumentTypeError("precision must be between 1 and 1000")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default=None)
    common.add_argument("--precision", type=_precision, default=None, help="decimal digits (enclosure width 10^-n)")
    common.add_argument("--out", default=None, help="write output to this file instead of stdout")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    parser = argparse.ArgumentParser(prog="vroots", description="Exact virtual roots of monic polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common], help="r-th virtual roots")
    p.add_argument("expr")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("thom", parents=[common], help="one Thom virtual root")
    p.add_argument("expr")
    p.add_argument("sigma", nargs="?", default="", help="signs of P^[1..d-1], e.g. '+-'")
    p.set_defaults(func=cmd_thom)

    p = sub.add_parser("table", parents=[common], help="all Thom virtual roots")
    p.add_argument("expr")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sweep", parents=[common], help="r-th virtual roots of y-slices, as CSV")
    p.add_argument("expr", help="polynomial in x and y, monic in y")
    p.add_argument("x_lo")
    p.add_argument("x_hi")
    p.add_argument("steps", type=int)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("modulus", parents=[common], help="uniform continuity modulus")
    p.add_argument("M")
    p.add_argument("eps")
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_modulus)

    p = sub.add_parser("check", parents=[common], help="run the invariant suite on one polynomial")
    p.add_argument("expr")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # argparse exits with 2 on bad usage
    if args.precision is None:
        env = os.environ.get("VROOTS_PRECISION")
        if env:
            try:
                args.precision = _precision(env)
            except argparse.ArgumentTypeError as exc:
                print(f"vroots: VROOTS_PRECISION: {exc}", file=sys.stderr)
                return EXIT_PARSE
        else:
            args.precision = SWEEP_PRECISION if args.command == "sweep" else DEFAULT_PRECISION
    if args.format is None:
        args.format = "csv" if args.command == "sweep" else "text"
    try:
        result = args.func(args)
    except ParseError as exc:
        print(f"vroots: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (Precondition, ValueError) as exc:
        print(f"vroots: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(result)
    else:
        sys.stdout.write(result)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
