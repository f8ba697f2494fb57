"""Command-line front end: ``eval``, ``table`` and ``verify``.

Exit status is 0 on success, 1 when a verification point fails and 2 on
usage or domain errors, which are reported as a single line on stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import Callable, Sequence

from . import gjef, gtf
from .errors import DomainError, EvaluationError
from .identities.report import CSV_COLUMNS
from .identities.suites import SUITES, run_suite

PROG = "genjacobi"
GRID_REL = 1e-12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # one line instead of the usage block
        raise UsageError(message)


def parse_grid(spec: str) -> list[float]:
    """Parse ``start:stop:step`` or a single number into a list of floats.

    The start is always included; the stop is included when ``stop - start``
    is an integer multiple of ``step`` to within a relative 1e-12.
    """
    parts = spec.split(":")
    try:
        vals = [float(v) for v in parts]
    except ValueError:
        raise UsageError(f"malformed grid spec {spec!r}") from None
    if not all(math.isfinite(v) for v in vals):
        raise UsageError(f"grid spec {spec!r} has a non-finite entry")
    if len(vals) == 1:
        return vals
    if len(vals) != 3:
        raise UsageError(f"grid spec must be start:stop:step, got {spec!r}")
    start, stop, step = vals
    if not step > 0.0 or stop < start:
        raise UsageError(f"grid spec {spec!r} is not strictly increasing")
    ratio = (stop - start) / step
    whole = round(ratio)
    if abs(ratio - whole) <= GRID_REL * max(1.0, abs(ratio)):
        count = int(whole) + 1
    else:
        count = int(math.floor(ratio)) + 1
    out = [float(f"{start + i * step:.15g}") for i in range(count)]
    if count > 1 and abs(ratio - whole) <= GRID_REL * max(1.0, abs(ratio)):
        out[-1] = stop
    return out


def _need(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--fn {args.fn} needs " + ", ".join(f"--{n}" for n in missing))


def _pair(a):
    return (a.p, a.q)


def _triple(a):
    return (a.p, a.q, a.r)


# name -> (required flags, evaluator(args, k, x))
FUNCTIONS: dict[str, tuple[tuple[str, ...], Callable]] = {
    "pi": (("p", "q"), lambda a, k, x: gtf.pi_pq(_pair(a))),
    "F": (("p", "q", "x"), lambda a, k, x: gtf.F_pq(_pair(a), x)),
    "sin": (("p", "q", "x"), lambda a, k, x: gtf.sin_pq(_pair(a), x)),
    "cos": (("p", "q", "x"), lambda a, k, x: gtf.cos_pq(_pair(a), x)),
    "H": (("p", "q", "r", "k", "x"), lambda a, k, x: gjef.H_pqr(_triple(a), k, x)),
    "K": (("p", "q", "r", "k"), lambda a, k, x: gjef.K_pqr(_triple(a), k)),
    "E": (("p", "q", "r", "k"), lambda a, k, x: gjef.E_pqr(_triple(a), k)),
    "K_p1r": (("p", "r", "k"), lambda a, k, x: gjef.K_p1r(a.p, a.r, k)),
    "E_p1r": (("p", "r", "k"), lambda a, k, x: gjef.E_p1r(a.p, a.r, k)),
    "sn": (("p", "q", "r", "k", "x"), lambda a, k, x: gjef.sn_pqr(_triple(a), k, x)),
    "cn": (("p", "q", "r", "k", "x"), lambda a, k, x: gjef.cn_pqr(_triple(a), k, x)),
    "dn": (("p", "q", "r", "k", "x"), lambda a, k, x: gjef.dn_pqr(_triple(a), k, x)),
    "am": (("p", "q", "r", "k", "x"), lambda a, k, x: gjef.am_pqr(_triple(a), k, x)),
}


def _build_parser() -> _Parser:
    parser = _Parser(prog=PROG, description="Generalized trigonometric and Jacobi elliptic functions.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def params(sp, grids: bool):
        sp.add_argument("--p", type=float)
        sp.add_argument("--q", type=float)
        sp.add_argument("--r", type=float)
        if grids:
            sp.add_argument("--k", help="value or start:stop:step grid")
            sp.add_argument("--x", help="value or start:stop:step grid")
        else:
            sp.add_argument("--k", type=float)
            sp.add_argument("--x", type=float)

    ev = sub.add_parser("eval", help="evaluate one function at one point")
    ev.add_argument("--fn", required=True, choices=sorted(FUNCTIONS))
    params(ev, grids=False)

    tb = sub.add_parser("table", help="tabulate a function over k and x grids")
    tb.add_argument("--fn", required=True, choices=sorted(FUNCTIONS))
    params(tb, grids=True)
    tb.add_argument("--format", choices=("csv", "json"), default="csv")

    vf = sub.add_parser("verify", help="run a verification suite")
    vf.add_argument("--suite", required=True, choices=SUITES + ("all",))
    params(vf, grids=True)
    vf.add_argument("--format", choices=("csv", "json"), default="json")
    vf.add_argument("--tol", type=float)
    return parser


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return repr(float(v)) if isinstance(v, float) else str(v)


def _cmd_eval(args, out) -> int:
    need, fn = FUNCTIONS[args.fn]
    _need(args, *need)
    print(repr(float(fn(args, args.k, args.x))), file=out)
    return 0


def _cmd_table(args, out) -> int:
    need, fn = FUNCTIONS[args.fn]
    _need(args, *need)
    ks = parse_grid(args.k) if args.k is not None else [None]
    xs = parse_grid(args.x) if args.x is not None else [None]
    rows = []
    for k in ks:
        for x in xs:
            rows.append((args.fn, args.p, args.q, args.r, k, x, float(fn(args, k, x))))
    cols = ("fn", "p", "q", "r", "k", "x", "value")
    if args.format == "json":
        json.dump({"fn": args.fn, "rows": [dict(zip(cols, r)) for r in rows]}, out)
        out.write("\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow(["" if v is None else _fmt(v) for v in r])
    return 0


def _cmd_verify(args, out) -> int:
    given = [v is not None for v in (args.p, args.q, args.r)]
    if any(given) and not all(given):
        raise UsageError("--p, --q and --r must be given together")
    if args.tol is not None and not args.tol > 0.0:
        raise UsageError(f"--tol must be positive, got {args.tol!r}")
    triples = [_triple(args)] if all(given) else None
    ks = parse_grid(args.k) if args.k is not None else None
    xs = parse_grid(args.x) if args.x is not None else None
    run = run_suite(args.suite, triples=triples, ks=ks, xs=xs, tol=args.tol)
    summary = run.summary
    if args.format == "json":
        doc = {
            "suite": run.suite,
            "generated_grid": run.grid,
            "points": [r.as_dict() for r in run.reports],
            "summary": summary,
        }
        json.dump(doc, out)
        out.write("\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in run.reports:
            w.writerow([_fmt(v) for v in r.as_row()])
    return 0 if summary["failed"] == 0 else 1


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    """Run the command line ``argv`` and return the exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = _build_parser().parse_args(argv)
        if args.command == "eval":
            return _cmd_eval(args, out)
        if args.command == "table":
            return _cmd_table(args, out)
        return _cmd_verify(args, out)
    except (UsageError, DomainError, EvaluationError) as exc:
        print(f"{PROG}: error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run())
