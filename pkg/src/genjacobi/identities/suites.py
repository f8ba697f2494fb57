"""Frozen verification grids and the suite runner.

Every suite evaluates its identities on a fixed grid and returns the
reports sorted by identity id and then by grid coordinates, so two runs
produce identical output. A caller may narrow a suite to one parameter
triple, a k-grid or an x-grid.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from ..errors import DomainError
from ..gjef import K_pqr, Modulus, ParamTriple, _triple, sn_with_complement, sncndn, H_pqr
from .inequalities import inequality_sides, mandated_sign
from .integrals import (
    power_integral_quadrature,
    recurrence_terms,
    wallis_I,
    wallis_II_sn,
)
from .legendre import (
    derivative_pair,
    legendre_constant,
    legendre_L,
    wronskian_invariant,
    y_ode_residual,
)
from .ode import EQUATIONS, ode_sides
from .report import VerificationReport, make_report, sort_key

__all__ = [
    "SUITES",
    "SuiteRun",
    "run_suite",
    "GRID_TRIPLES",
    "LEGENDRE_TRIPLES",
    "LEGENDRE_K",
    "PYTHAGOREAN_TRIPLES",
    "ODE_TRIPLES",
    "TOLERANCES",
]

SUITES = (
    "legendre",
    "wallis1",
    "wallis2",
    "recurrence",
    "ode",
    "inequalities",
    "pythagorean",
    "roundtrip",
    "derivative",
)

GRID_TRIPLES = tuple(itertools.product((1.5, 2.0, 3.0), repeat=3))
ALPHA_ZERO_TRIPLES = ((2.0, 4.0, 4.0), (1.5, 2.0, 6.0), (2.0, 3.0, 6.0))
ALPHA_NEGATIVE_TRIPLES = ((1.5, 4.0, 4.0), (2.0, 5.0, 5.0), (1.2, 4.0, 3.0))
LEGENDRE_TRIPLES = GRID_TRIPLES + ALPHA_ZERO_TRIPLES + ALPHA_NEGATIVE_TRIPLES
LEGENDRE_K = tuple(round(0.05 * i, 2) for i in range(1, 20))

WALLIS_K = (0.0, 0.5, 0.9)
WALLIS_N = (0, 1, 2, 3)
WALLIS2_K = (0.5, 0.9)
WALLIS2_N = tuple(range(9))
DN_POWERS = (-1.0, 0.5, 3.0)
RECURRENCE_A = (-0.5, 0.0, 1.0, 2.3)

ODE_K = (0.6,)
ODE_POINTS = 20
ODE_TRIPLES = {
    "snode": ((2.0, 2.0, 2.0), (1.5, 3.0, 2.0), (3.0, 2.0, 2.5)),
    "allencahn": ((2.0, 2.0, 2.0), (3.0, 1.5, 1.5), (1.5, 2.0, 3.0)),
    "cnode": ((2.0, 2.0, 2.0), (2.5, 2.0, 3.0), (1.5, 3.0, 2.0)),
    "cnallencahn": ((2.0, 2.0, 2.0), (3.0, 2.0, 2.0), (1.5, 3.0, 3.0)),
    "dnode": ((2.0, 2.0, 2.0), (2.5, 2.0, 3.0), (1.5, 3.0, 2.0)),
    "dnallencahn": ((2.0, 2.0, 2.0), (3.0, 1.5, 2.0), (1.5, 3.0, 2.5)),
}

INEQUALITY_EXPONENTS = (1.2, 1.5, 2.0, 3.0, 5.0)
INEQUALITY_K = (0.0, 0.5)
INEQUALITY_POINTS = 50
#: The exponent under test is swapped into the first (p) or second (q) slot.
INEQUALITY_BASE = (2.5, 2.5, 2.0)

# 27 triples drawn once from {1.5, 2, 2.5, 3}^3 and frozen here
PYTHAGOREAN_TRIPLES = (
    (1.5, 1.5, 2.0), (1.5, 1.5, 2.5), (1.5, 1.5, 3.0), (1.5, 2.0, 1.5), (1.5, 2.5, 2.0),
    (1.5, 2.5, 3.0), (1.5, 3.0, 3.0), (2.0, 1.5, 1.5), (2.0, 1.5, 2.0), (2.0, 2.0, 1.5),
    (2.0, 2.0, 3.0), (2.0, 2.5, 1.5), (2.0, 2.5, 2.0), (2.0, 2.5, 3.0), (2.0, 3.0, 1.5),
    (2.5, 2.0, 3.0), (2.5, 2.5, 1.5), (2.5, 2.5, 2.5), (2.5, 3.0, 3.0), (3.0, 1.5, 2.0),
    (3.0, 2.0, 1.5), (3.0, 2.0, 3.0), (3.0, 2.5, 2.0), (3.0, 2.5, 2.5), (3.0, 2.5, 3.0),
    (3.0, 3.0, 2.5), (3.0, 3.0, 3.0),
)  # fmt: skip
PYTHAGOREAN_K = (0.0, 0.3, 0.7, 0.95)
PYTHAGOREAN_POINTS = 200

ROUNDTRIP_K = (0.0, 0.5, 0.95)
ROUNDTRIP_POINTS = 20
ROUNDTRIP_MARGIN = 1e-6

DERIVATIVE_K = (0.2, 0.5, 0.8)
WRONSKIAN_TRIPLES = (
    (2.0, 2.0, 2.0), (3.0, 2.0, 2.0), (2.5, 2.0, 3.0), (1.5, 3.0, 2.0),
    (2.0, 4.0, 4.0), (1.5, 2.0, 6.0), (1.5, 4.0, 4.0),
)  # fmt: skip

TOLERANCES = {
    "legendre": 1e-10,
    "wallis1": 1e-7,
    "wallis2": 1e-7,
    "recurrence": 1e-9,
    "ode": 1e-5,
    "inequalities": 1e-12,
    "pythagorean": 1e-12,
    "roundtrip": 1e-9,
    "derivative": 1e-6,
    "wronskian": 1e-5,
    "y_ode": 1e-4,
}


@dataclass
class SuiteRun:
    suite: str
    grid: dict
    reports: list[VerificationReport] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        passed = sum(1 for r in self.reports if r.passed)
        rel = [r.rel_err for r in self.reports]
        return {
            "total": len(self.reports),
            "passed": passed,
            "failed": len(self.reports) - passed,
            "max_rel_err": max(rel) if rel else 0.0,
        }


@dataclass(frozen=True)
class _Options:
    triples: tuple | None
    ks: tuple | None
    xs: tuple | None
    tol: float | None

    def tol_for(self, key: str) -> float:
        return TOLERANCES[key] if self.tol is None else self.tol


def _triples(opts: _Options, default) -> list[ParamTriple]:
    src = default if opts.triples is None else opts.triples
    return [_triple(t) for t in src]


def _ks(opts: _Options, default) -> tuple:
    return tuple(default if opts.ks is None else opts.ks)


def _grid(triples, ks, xs=None, **extra) -> dict:
    g = {"triples": [[t.p, t.q, t.r] for t in triples], "k": list(ks)}
    if xs is not None:
        g["x"] = list(xs)
    g.update(extra)
    return g


def _legendre(opts: _Options) -> SuiteRun:
    triples = _triples(opts, LEGENDRE_TRIPLES)
    ks = _ks(opts, LEGENDRE_K)
    tol = opts.tol_for("legendre")
    out = []
    for pt in triples:
        const = legendre_constant(pt)
        for k in ks:
            out.append(make_report("legendre", pt, k, k, legendre_L(pt, k), const, tol))
    return SuiteRun("legendre", _grid(triples, ks), out)


def _wallis_cases(pt: ParamTriple):
    """(identity id, remainder or power, exponent function, quadrature args)."""
    p, q = pt.p, pt.q
    for R in ((q - 2.0) / 2.0, q - 1.0):
        yield "wallis1_sn", R, lambda n, R=R: (q * n + R, 0.0, 0.0)
    for R in ((2.0 - p) / 2.0, 1.0):
        yield "wallis1_cn", R, lambda n, R=R: (0.0, p * n + R, 0.0)
    for c in DN_POWERS:
        yield "wallis1_dn", c, lambda n, c=c: (0.0, 0.0, c)


def _wallis1(opts: _Options) -> SuiteRun:
    triples = _triples(opts, GRID_TRIPLES)
    ks = _ks(opts, WALLIS_K)
    tol = opts.tol_for("wallis1")
    out = []
    for pt in triples:
        for k in ks:
            for ident, R, abc in _wallis_cases(pt):
                kind = ident[-2:]
                ns = (0,) if kind == "dn" else WALLIS_N
                for n in ns:
                    a, b, c = abc(n)
                    point = {"sn": a, "cn": b, "dn": c}[kind]
                    lhs = wallis_I(pt, k, kind, n, R)
                    rhs = power_integral_quadrature(pt, k, a, b, c)
                    out.append(make_report(ident, pt, k, point, lhs, rhs, tol))
    return SuiteRun("wallis1", _grid(triples, ks, n=list(WALLIS_N), dn_powers=list(DN_POWERS)), out)


def _wallis2(opts: _Options) -> SuiteRun:
    triples = _triples(opts, GRID_TRIPLES)
    ks = tuple(k for k in _ks(opts, WALLIS2_K) if k > 0.0)
    tol = opts.tol_for("wallis2")
    out = []
    for pt in triples:
        for k in ks:
            for R in ((pt.q - 2.0) / 2.0, pt.q - 1.0):
                for n in WALLIS2_N:
                    lhs = wallis_II_sn(pt, k, n, R)
                    rhs = wallis_I(pt, k, "sn", n, R)
                    out.append(make_report("wallis2_sn", pt, k, pt.q * n + R, lhs, rhs, tol))
    return SuiteRun("wallis2", _grid(triples, ks, n=list(WALLIS2_N)), out)


def _recurrence(opts: _Options) -> SuiteRun:
    triples = _triples(opts, GRID_TRIPLES)
    ks = _ks(opts, WALLIS_K)
    tol = opts.tol_for("recurrence")
    out = []
    for pt in triples:
        for k in ks:
            for a in RECURRENCE_A:
                t2, t1, t0 = recurrence_terms(pt, k, a)
                out.append(make_report("recurrence", pt, k, a, t0, -math.fsum((t1, t2)), tol))
    return SuiteRun("recurrence", _grid(triples, ks, a=list(RECURRENCE_A)), out)


def _ode_allowed(pt: ParamTriple, which: str) -> bool:
    rel = 1e-12
    if which == "allencahn":
        return abs(pt.r - pt.p_star) <= rel * pt.r
    if which == "cnallencahn":
        return abs(pt.r - pt.q) <= rel * pt.r
    if which == "dnallencahn":
        return abs(pt.q - pt.p_star) <= rel * pt.q
    return True


def _ode(opts: _Options) -> SuiteRun:
    ks = _ks(opts, ODE_K)
    tol = opts.tol_for("ode")
    out = []
    used = []
    for which in EQUATIONS:
        if opts.triples is None:
            triples = [_triple(t) for t in ODE_TRIPLES[which]]
        else:
            triples = [t for t in _triples(opts, ()) if _ode_allowed(t, which)]
        for pt in triples:
            if pt not in used:
                used.append(pt)
            for k in ks:
                if which.startswith("dn") and k == 0.0:
                    continue
                big_k = K_pqr(pt, k)
                if opts.xs is None:
                    xs = [big_k * (j + 0.5) / 5.0 for j in range(ODE_POINTS)]
                else:
                    xs = opts.xs
                for x in xs:
                    lhs, rhs = ode_sides(pt, k, which, x)
                    out.append(make_report(which, pt, k, x, lhs, rhs, tol))
    return SuiteRun("ode", _grid(used, ks, opts.xs, equations=list(EQUATIONS)), out)


def _projected(margin: float, sign: int) -> float:
    if sign > 0:
        return max(margin, 0.0)
    if sign < 0:
        return min(margin, 0.0)
    return 0.0


def _inequalities(opts: _Options) -> SuiteRun:
    tol = opts.tol_for("inequalities")
    out = []
    used = []
    base = INEQUALITY_BASE
    if opts.triples is None:
        cases = [("thm_sn_cn_p", (e, base[1], base[2])) for e in INEQUALITY_EXPONENTS]
        cases += [("thm_sn_cn_q", (base[0], e, base[2])) for e in INEQUALITY_EXPONENTS]
        cases += [("carlen", (e, base[1], base[2])) for e in INEQUALITY_EXPONENTS]
    else:
        cases = [(w, t) for t in opts.triples for w in ("thm_sn_cn_p", "thm_sn_cn_q", "carlen")]
    ks = _ks(opts, INEQUALITY_K)
    for which, t in cases:
        pt = _triple(t)
        if pt not in used:
            used.append(pt)
        sign = mandated_sign(pt, which)
        for k in (0.0,) if which == "carlen" else ks:
            if which == "carlen":
                pts = np.linspace(0.0, 1.0, INEQUALITY_POINTS) if opts.xs is None else opts.xs
            else:
                big_k = K_pqr(pt, k)
                pts = np.linspace(0.0, big_k, INEQUALITY_POINTS) if opts.xs is None else opts.xs
            for x in pts:
                lhs, rhs = inequality_sides(pt, k, which, float(x))
                margin = rhs - lhs
                out.append(make_report(which, pt, k, x, margin, _projected(margin, sign), tol))
    grid = _grid(used, ks, opts.xs, exponents=list(INEQUALITY_EXPONENTS))
    return SuiteRun("inequalities", grid, out)


def _period_points(big_k: float, xs) -> list[float]:
    if xs is not None:
        return list(xs)
    return [4.0 * big_k * j / PYTHAGOREAN_POINTS for j in range(PYTHAGOREAN_POINTS)]


def _pythagorean(opts: _Options) -> SuiteRun:
    triples = _triples(opts, PYTHAGOREAN_TRIPLES)
    ks = _ks(opts, PYTHAGOREAN_K)
    tol = opts.tol_for("pythagorean")
    out = []
    for pt in triples:
        for k in ks:
            mod = Modulus.of(k, pt)
            for x in _period_points(K_pqr(pt, mod), opts.xs):
                s, c, d = sncndn(pt, mod, x)
                sq = abs(s) ** pt.q
                lhs_c = abs(c) ** pt.p + sq
                lhs_d = d**pt.r_star + mod.k_pow_q * sq
                out.append(make_report("pythagorean_cn", pt, k, x, lhs_c, 1.0, tol))
                out.append(make_report("pythagorean_dn", pt, k, x, lhs_d, 1.0, tol))
    return SuiteRun("pythagorean", _grid(triples, ks, opts.xs), out)


def _roundtrip(opts: _Options) -> SuiteRun:
    triples = _triples(opts, GRID_TRIPLES)
    ks = _ks(opts, ROUNDTRIP_K)
    tol = opts.tol_for("roundtrip")
    out = []
    for pt in triples:
        for k in ks:
            mod = Modulus.of(k, pt)
            big_k = K_pqr(pt, mod)
            if opts.xs is None:
                xs = np.linspace(0.0, big_k * (1.0 - ROUNDTRIP_MARGIN), ROUNDTRIP_POINTS)
            else:
                xs = [x for x in opts.xs if 0.0 <= x <= big_k]
            for x in xs:
                s, delta = sn_with_complement(pt, mod, float(x))
                back = H_pqr(pt, mod, s, omx=delta)
                out.append(make_report("roundtrip_sn", pt, k, x, back, x, tol))
    return SuiteRun("roundtrip", _grid(triples, ks, opts.xs), out)


def _derivative(opts: _Options) -> SuiteRun:
    triples = _triples(opts, LEGENDRE_TRIPLES)
    ks = _ks(opts, DERIVATIVE_K)
    tol = opts.tol_for("derivative")
    out = []
    for pt in triples:
        for k in ks:
            for which in ("dK", "dE", "dKprime", "dEprime"):
                fd, closed = derivative_pair(pt, k, which)
                out.append(make_report(which, pt, k, k, fd, closed, tol))
            y_tol = opts.tol_for("y_ode")
            for which in ("y1", "y2"):
                res = y_ode_residual(pt, k, which)
                out.append(make_report(f"{which}_ode", pt, k, k, res, 0.0, y_tol))

    w_triples = _triples(opts, WRONSKIAN_TRIPLES)
    w_ks = _ks(opts, LEGENDRE_K)
    w_tol = opts.tol_for("wronskian")
    for pt in w_triples:
        first = None
        for k in w_ks:
            c_fd, c_closed = wronskian_invariant(pt, k)
            out.append(make_report("wronskian", pt, k, k, c_fd, c_closed, w_tol))
            if first is None:
                first = c_fd
            out.append(make_report("wronskian_const", pt, k, k, c_fd, first, w_tol))
    grid = _grid(triples, ks, wronskian_triples=[[t.p, t.q, t.r] for t in w_triples], wronskian_k=list(w_ks))
    return SuiteRun("derivative", grid, out)


_RUNNERS: dict[str, Callable[[_Options], SuiteRun]] = {
    "legendre": _legendre,
    "wallis1": _wallis1,
    "wallis2": _wallis2,
    "recurrence": _recurrence,
    "ode": _ode,
    "inequalities": _inequalities,
    "pythagorean": _pythagorean,
    "roundtrip": _roundtrip,
    "derivative": _derivative,
}


def run_suite(
    name: str,
    triples: Sequence | None = None,
    ks: Sequence[float] | None = None,
    xs: Sequence[float] | None = None,
    tol: float | None = None,
) -> SuiteRun:
    """Run one named suite, or ``"all"`` of them, on the frozen grids.

    ``triples``, ``ks`` and ``xs`` replace the corresponding default grid
    when given; ``tol`` replaces every per-identity tolerance.
    """
    opts = _Options(
        None if triples is None else tuple(tuple(float(v) for v in t) for t in triples),
        None if ks is None else tuple(float(k) for k in ks),
        None if xs is None else tuple(float(x) for x in xs),
        tol,
    )
    if name == "all":
        runs = [_RUNNERS[s](opts) for s in SUITES]
        reports = [r for run in runs for r in run.reports]
        grid = {run.suite: run.grid for run in runs}
        return SuiteRun("all", grid, sorted(reports, key=sort_key))
    if name not in _RUNNERS:
        raise DomainError(f"unknown suite {name!r}; choose from {SUITES + ('all',)}")
    run = _RUNNERS[name](opts)
    run.reports.sort(key=sort_key)
    return run
