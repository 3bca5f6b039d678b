"""Command-line frontend: ``riordan-fc {triangle,production,verify,hankel,paths}``.

Exit status: 0 on success, 1 when a verification suite reports a failure,
2 on a usage error. Every number is written as an exact decimal or ``p/q``
string.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction
from typing import Sequence

from . import dortho, paths, verify
from .fusscatalan import coefficient_array, fc_square, fcr, fcr_array, hankel_transform, pre_fcr_array
from .production import ProdMatrix, production_matrix
from .riordan import LTMatrix, SquareGrid, to_matrix

DEFAULT_ORDER = 16
DEFAULT_MAX_ORDER = 24


class UsageError(Exception):
    pass


def max_order() -> int:
    raw = os.environ.get("RIORDAN_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"RIORDAN_MAX_ORDER must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError("RIORDAN_MAX_ORDER must be positive")
    return cap


def _check_order(order: int) -> int:
    cap = max_order()
    if order < 1:
        raise UsageError("order must be positive")
    if order > cap:
        raise UsageError(f"order {order} exceeds the cap {cap} (set RIORDAN_MAX_ORDER to raise it)")
    return order


def _check_rows(rows: int) -> int:
    if rows < 1:
        raise UsageError("--rows must be at least 1")
    _check_order(max(rows - 1, 1))
    return rows


# serialization

def fmt(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def rows_of(obj) -> list[list[Fraction]]:
    if isinstance(obj, LTMatrix):
        return [list(r) for r in obj.rows]
    if isinstance(obj, (SquareGrid, ProdMatrix)):
        return obj.to_lists()
    return [list(r) for r in obj]


def render(kind: str, r: int, rows: list[list], form: str) -> str:
    cells = [[fmt(v) for v in row] for row in rows]
    if form == "json":
        return json.dumps({"kind": kind, "r": r, "rows": cells}) + "\n"
    if form == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(cells)
        return buf.getvalue()
    width = max((len(c) for row in cells for c in row), default=1)
    return "".join(" ".join(c.rjust(width) for c in row) + "\n" for row in cells)


def parse_rows(text: str, form: str) -> list[list[Fraction]]:
    """Inverse of :func:`render` for ``csv`` and ``json``."""
    if form == "json":
        return [[Fraction(c) for c in row] for row in json.loads(text)["rows"]]
    if form == "csv":
        return [[Fraction(c) for c in row] for row in csv.reader(io.StringIO(text)) if row]
    raise ValueError("only csv and json round-trip")


def _emit(args, kind: str, r: int, rows) -> None:
    _write(args, render(kind, r, rows_of(rows), args.format))


def _write(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _numbers(text: str) -> list[Fraction]:
    parts = [p for p in re.split(r"[,\s;]+", text.strip()) if p]
    try:
        return [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse numbers from {text!r}") from None


def _recurrence(args) -> dortho.Recurrence:
    if args.rec is None:
        if args.init is not None:
            raise UsageError("--init needs --rec")
        try:
            return dortho.special_recurrence(args.r)
        except ValueError as exc:
            raise UsageError(f"{exc}; or pass --rec/--init") from None
    tail = _numbers(args.rec)
    init = _numbers(args.init or "")
    try:
        return dortho.Recurrence(tail, init)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# commands

def _lower_triangle(args, rows: int) -> LTMatrix:
    kind, r = args.kind, args.r
    if kind == "pre":
        return to_matrix(pre_fcr_array(r, max(rows - 1, 1)), rows)
    if kind == "fcr":
        if r < 0:
            raise UsageError("fcr needs r >= 0")
        return LTMatrix([[fcr(n, k, r) for k in range(n + 1)] for n in range(rows)])
    if kind == "coeff":
        return to_matrix(coefficient_array(r, max(rows - 1, 1)), rows)
    if kind == "dortho-coeff":
        return dortho.generate_family(_recurrence(args), rows - 1).coeff_rows
    if kind == "dortho-moment":
        return dortho.generate_family(_recurrence(args), rows - 1).moments()
    raise UsageError(f"unknown kind {kind!r}")


def cmd_triangle(args) -> int:
    rows = _check_rows(args.rows)
    if args.kind == "fc-square":
        if args.r < 0:
            raise UsageError("fc-square needs r >= 0")
        _emit(args, args.kind, args.r, fc_square(args.r, rows))
    else:
        _emit(args, args.kind, args.r, _lower_triangle(args, rows))
    return 0


def cmd_production(args) -> int:
    rows = _check_rows(args.rows)
    if args.identity:
        _emit(args, "identity", 0, ProdMatrix.shift(rows))
        return 0
    if args.kind is None:
        raise UsageError("give --kind or --identity")
    _check_order(rows)
    if args.kind == "fcr":
        M = to_matrix(fcr_array(args.r, rows), rows + 1)
    else:
        M = _lower_triangle(args, rows + 1)
    _emit(args, args.kind, args.r, production_matrix(M))
    return 0


def cmd_verify(args) -> int:
    order = _check_order(args.order)
    ok = True
    out = sys.stdout
    for rep in verify.run(args.suite, order):
        for line in rep.lines():
            out.write(f"[{rep.title}] {line}\n")
        ok = ok and rep.ok
    out.write(("ALL PASS" if ok else "FAILURES") + "\n")
    return 0 if ok else 1


def cmd_hankel(args) -> int:
    if (args.seq is None) == (args.file is None):
        raise UsageError("give exactly one of --seq or --file")
    if args.file is not None:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    else:
        text = args.seq
    seq = _numbers(text)
    terms = args.terms if args.terms is not None else (len(seq) + 1) // 2
    if terms < 1:
        raise UsageError("--terms must be at least 1")
    if len(seq) < 2 * terms - 1:
        raise UsageError(f"{terms} terms need {2 * terms - 1} sequence values, got {len(seq)}")
    _emit(args, "hankel", 0, [hankel_transform(seq, terms)])
    return 0


def _point(text: str) -> tuple[int, int]:
    try:
        x, y = (int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"bad target {text!r}; expected x,y") from None
    return x, y


def cmd_paths(args) -> int:
    ss = paths.StepSet.parse(args.steps)
    floor = not args.free
    if args.mode == "count":
        if args.target is not None:
            target = _point(args.target)
        elif args.n is not None:
            if args.n < 0:
                raise UsageError("--n must be non-negative")
            ux, uy = paths.excursion_unit(ss)
            target = (args.n * ux, args.n * uy)
        else:
            raise UsageError("count mode needs --n or --target")
        value = paths.count_paths(ss, target, floor)
        if args.format == "table":
            _write(args, f"{value}\n")
        else:
            _emit(args, "paths-count", 0, [[value]])
        return 0
    rows = _check_rows(args.rows)
    _emit(args, "paths-triangle", 0, paths.left_factor_triangle(ss, rows, args.index, floor))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="riordan-fc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def output(p):
        p.add_argument("--format", choices=("table", "csv", "json"), default="table")
        p.add_argument("--out", help="write here instead of standard output")

    def dortho_opts(p):
        p.add_argument("--rec", help="tail coefficients a,b[,c[,d]] of a d-orthogonal family")
        p.add_argument("--init", help="initial parameters α[,β,γ[,ρ,σ,τ]]")

    kinds = ("pre", "fcr", "fc-square", "coeff", "dortho-coeff", "dortho-moment")
    p = sub.add_parser("triangle", help="print a number triangle or square")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--rows", type=int, default=7)
    dortho_opts(p)
    output(p)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("production", help="print a production matrix")
    p.add_argument("--kind", choices=tuple(k for k in kinds if k != "fc-square"))
    p.add_argument("--identity", action="store_true", help="the shift matrix of the identity array")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--rows", type=int, default=7)
    dortho_opts(p)
    output(p)
    p.set_defaults(func=cmd_production)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("--suite", choices=(*verify.SUITES, "all"), default="all")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hankel", help="Hankel transform of a sequence")
    p.add_argument("--seq", help="comma or space separated values")
    p.add_argument("--file", help="file of comma or whitespace separated values")
    p.add_argument("--terms", type=int)
    output(p)
    p.set_defaults(func=cmd_hankel)

    p = sub.add_parser("paths", help="count lattice paths")
    p.add_argument("--steps", required=True, help='e.g. "1,1;-1,-2" or "1,1;2,0:3"')
    p.add_argument("--mode", choices=("count", "triangle"), default="count")
    p.add_argument("--n", type=int, help="count paths of n height-neutral units")
    p.add_argument("--target", help="explicit endpoint x,y")
    p.add_argument("--rows", type=int, default=7)
    p.add_argument("--index", choices=("x", "y"), default="x")
    p.add_argument("--free", action="store_true", help="allow paths below the x-axis")
    output(p)
    p.set_defaults(func=cmd_paths)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, ArithmeticError) as exc:
        print(f"riordan-fc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
