"""Generalized trigonometric functions with two parameters.

``F_pq(x)`` is the integral of ``(1 - t**q)**(-1/p)`` over (0, x);
``sin_pq`` is its inverse on [0, pi_pq/2] and ``cos_pq = (1 - sin_pq**q)**(1/p)``.
Both are extended to the whole real line with the same parity and
anti-periodicity as the classical sine and cosine (period ``2 pi_pq``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import _kernel
from .errors import DomainError
from .specfun import beta

__all__ = [
    "ParamPair",
    "conjugate",
    "pi_pq",
    "pi_extended",
    "F_pq",
    "sin_pq",
    "cos_pq",
    "sin_cos_pq",
    "sin_with_complement",
]


def conjugate(s: float) -> float:
    """Hoelder conjugate s/(s - 1), with 1* = inf and inf* = 1."""
    if s == 1.0:
        return math.inf
    if math.isinf(s):
        return 1.0
    return s / (s - 1.0)


@dataclass(frozen=True)
class ParamPair:
    p: float
    q: float

    def __post_init__(self):
        for name in ("p", "q"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 1.0):
                raise DomainError(f"{name} must be a finite number > 1, got {v!r}")

    @property
    def p_star(self) -> float:
        return conjugate(self.p)

    @property
    def q_star(self) -> float:
        return conjugate(self.q)


def _pair(pp) -> ParamPair:
    if isinstance(pp, ParamPair):
        return pp
    p, q = pp
    return ParamPair(float(p), float(q))


@lru_cache(maxsize=1024)
def _half_pi(p: float, q: float) -> float:
    # pi_{p,q} / 2 = B(1/p*, 1/q) / q
    return beta(1.0 - 1.0 / p, 1.0 / q) / q


def pi_pq(pp) -> float:
    """pi_{p,q} = (2/q) B(1/p*, 1/q); equals pi for p = q = 2."""
    pp = _pair(pp)
    return 2.0 * _half_pi(pp.p, pp.q)


def pi_extended(p: float, q: float) -> float:
    """pi_{p,q} including the boundary cases pi_{p,1} = 2p* and pi_{inf,q} = 2."""
    if math.isinf(p) and p > 0 and q >= 1.0 and math.isfinite(q):
        return 2.0
    if q == 1.0 and p > 1.0 and math.isfinite(p):
        return 2.0 * conjugate(p)
    if p > 1.0 and q > 1.0 and math.isfinite(p) and math.isfinite(q):
        return pi_pq((p, q))
    raise DomainError(f"pi_{{p,q}} is not defined for (p, q) = ({p!r}, {q!r})")


def F_pq(pp, x: float, omx: float | None = None) -> float:
    """Incomplete integral F_{p,q}(x) for x in [0, 1].

    ``omx`` may carry ``1 - x`` to more digits than the subtraction gives.
    """
    pp = _pair(pp)
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"F_pq requires 0 <= x <= 1, got {x!r}")
    if omx is None:
        omx = 1.0 - x
    if omx == 0.0:
        return _half_pi(pp.p, pp.q)
    return _kernel.split(pp.p, pp.q, 0.0, 0.0, 1.0, _half_pi(pp.p, pp.q), x, omx)


def _sin_core(p: float, q: float, x: float) -> tuple[float, float, int, int]:
    half = _half_pi(p, q)
    r, gap, s_sign, c_sign = _kernel.fold(x, half)
    s, delta = _kernel.invert(p, q, 0.0, 0.0, 1.0, r, gap)
    return s, delta, s_sign, c_sign


def sin_pq(pp, x: float) -> float:
    """sin_{p,q} x on the whole real line."""
    pp = _pair(pp)
    s, _, sign, _ = _sin_core(pp.p, pp.q, x)
    return sign * s


def sin_with_complement(pp, x: float) -> tuple[float, float]:
    """``(sin_pq x, 1 - |sin_pq x|)``, the second entry to full relative precision."""
    pp = _pair(pp)
    s, delta, sign, _ = _sin_core(pp.p, pp.q, x)
    return sign * s, delta


def cos_pq(pp, x: float) -> float:
    """cos_{p,q} x on the whole real line."""
    return sin_cos_pq(pp, x)[1]


def sin_cos_pq(pp, x: float) -> tuple[float, float]:
    """Both sin_{p,q} x and cos_{p,q} x from a single inversion."""
    pp = _pair(pp)
    s, delta, s_sign, c_sign = _sin_core(pp.p, pp.q, x)
    c = _kernel.omp(s, delta, pp.q) ** (1.0 / pp.p)
    return s_sign * s, c_sign * c
