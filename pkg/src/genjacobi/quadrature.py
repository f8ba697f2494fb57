"""Tanh-sinh (double-exponential) quadrature on (0, 1).

The substitution ``t = (1 + tanh(pi/2 sinh s)) / 2`` clusters nodes
double-exponentially at both endpoints, so integrable algebraic endpoint
singularities such as ``(1 - t)**(-1/p)`` are handled by the plain trapezoid
rule in ``s``. Step sizes are halved level by level, reusing every previous
node.

Integrands are called as ``f(t, omt)`` with numpy arrays, where ``omt`` is
``1 - t`` computed directly from the rule rather than by subtraction. Near
``t = 1`` the subtraction would lose every significant digit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .errors import DomainError, EvaluationError

__all__ = [
    "QuadratureResult",
    "integrate_01",
    "integrate_0x",
    "integrate_x1",
    "one_minus_power",
    "DEFAULT_TOL",
    "MAX_LEVEL",
]

Integrand = Callable[[np.ndarray, np.ndarray], np.ndarray]

DEFAULT_TOL = 1e-12
#: Finest level has step 2**-MAX_LEVEL, about 12 * 2**MAX_LEVEL nodes (~2**12).
MAX_LEVEL = 8
MIN_LEVEL = 3
# At |s| = 6 the distance to the endpoint is ~1e-275; beyond that it underflows.
_S_MAX = 6.0
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    est_error: float
    evaluations: int

    def __float__(self) -> float:
        return self.value


def _level_nodes(level: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Nodes added at ``level`` as (t, 1 - t, dt/ds)."""
    if level == 0:
        s = np.arange(-_S_MAX, _S_MAX + 0.5, 1.0)
    else:
        h = 2.0**-level
        n = int(round(_S_MAX / h))
        s = np.arange(-n + 1, n, 2) * h
    u = 0.5 * math.pi * np.sinh(s)
    e = np.exp(-2.0 * np.abs(u))
    lo = e / (1.0 + e)  # distance from the nearer endpoint
    hi = 1.0 / (1.0 + e)
    t = np.where(u >= 0, hi, lo)
    omt = np.where(u >= 0, lo, hi)
    # dt/ds = (pi/4) cosh(s) sech(u)**2, with sech**2 = 4 e / (1 + e)**2
    w = 0.25 * math.pi * np.cosh(s) * 4.0 * e / (1.0 + e) ** 2
    for a in (t, omt, w):
        a.setflags(write=False)
    return t, omt, w


_NODES = tuple(_level_nodes(level) for level in range(MAX_LEVEL + 1))


def _refine(f: Integrand, max_level: int = MAX_LEVEL) -> Iterator[tuple[int, float, int]]:
    """Yield ``(level, trapezoid estimate, cumulative evaluations)``."""
    raw = 0.0
    evals = 0
    for level in range(max_level + 1):
        t, omt, w = _NODES[level]
        vals = np.broadcast_to(np.asarray(f(t, omt), dtype=float), t.shape)
        if not np.all(np.isfinite(vals)):
            bad = t[~np.isfinite(vals)][0]
            raise EvaluationError(f"integrand is not finite at t = {bad!r}")
        evals += t.size
        raw += float(np.dot(w, vals))
        yield level, raw * 2.0**-level, evals


def integrate_01(
    f: Integrand, tol: float = DEFAULT_TOL, max_level: int = MAX_LEVEL
) -> QuadratureResult:
    """Integrate ``f(t, 1 - t)`` over (0, 1).

    Levels are refined until two successive estimates differ by at most
    ``max(tol, 10 * eps * |value|)``. If ``max_level`` is reached first the
    result is returned anyway with its (too large) ``est_error``.
    """
    prev = None
    value = 0.0
    est = math.inf
    evals = 0
    for level, value, evals in _refine(f, max_level):
        if prev is not None:
            est = abs(value - prev)
            if level >= MIN_LEVEL and est <= max(tol, 10.0 * _EPS * abs(value)):
                break
        prev = value
    return QuadratureResult(value, est, evals)


def integrate_0x(
    f: Integrand,
    x: float,
    tol: float = DEFAULT_TOL,
    omx: float | None = None,
    max_level: int = MAX_LEVEL,
) -> QuadratureResult:
    """Integrate ``f(t, 1 - t)`` over (0, x) for 0 < x <= 1.

    ``omx`` may supply ``1 - x`` when the caller knows it more accurately
    than the subtraction would give it.
    """
    if not (0.0 < x <= 1.0):
        raise DomainError(f"integrate_0x requires 0 < x <= 1, got {x!r}")
    if omx is None:
        omx = 1.0 - x

    def g(s, oms):
        return f(x * s, omx + x * oms)

    res = integrate_01(g, tol / x, max_level)
    return QuadratureResult(x * res.value, x * res.est_error, res.evaluations)


def integrate_x1(
    f: Integrand,
    x: float,
    tol: float = DEFAULT_TOL,
    omx: float | None = None,
    max_level: int = MAX_LEVEL,
) -> QuadratureResult:
    """Integrate ``f(t, 1 - t)`` over (x, 1) for 0 <= x < 1."""
    if omx is None:
        omx = 1.0 - x
    if not (0.0 < omx <= 1.0):
        raise DomainError(f"integrate_x1 requires 0 <= x < 1, got {x!r}")

    def g(s, oms):
        return f(x + omx * s, omx * oms)

    res = integrate_01(g, tol / omx, max_level)
    return QuadratureResult(omx * res.value, omx * res.est_error, res.evaluations)


def one_minus_power(t, omt, q: float):
    """``1 - t**q`` without cancellation near t = 1.

    ``omt`` is ``1 - t`` as supplied by the rule; it is used for t >= 1/2.
    """
    if q == 1.0:
        return omt
    near = -np.expm1(q * np.log1p(-np.minimum(omt, 0.5)))
    return np.where(t < 0.5, 1.0 - np.power(t, q), near)
