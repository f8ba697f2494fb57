"""Shared machinery for the incomplete integrals and their inverses.

Every incomplete integral in the package has the density

    f(t) = (1 - t**q)**(-1/p) * (1 - m t**q)**(-b)

with ``m = k**q`` and ``b = 1 - 1/r`` (``b = 0`` for the trigonometric case).
Points near ``t = 1`` are carried as the pair ``(s, delta)`` with
``delta = 1 - s`` so that ``1 - s**q`` never suffers cancellation, and
``1 - m t**q`` is formed as ``m1 + m (1 - t**q)`` from the exact complement
``m1 = 1 - m`` supplied by the caller.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .quadrature import integrate_0x, integrate_x1, one_minus_power

INNER_TOL = 1e-15
NEWTON_MAX_ITER = 200
STEP_TOL = 1e-15
LOG_STEP_TOL = 1e-14
_TINY = 1e-30


def omp(s: float, delta: float, q: float) -> float:
    """Scalar ``1 - s**q`` from the pair (s, 1 - s)."""
    if s < 0.5:
        return 1.0 - s**q
    if q == 1.0:
        return delta
    return -math.expm1(q * math.log1p(-delta))


def integrand(p: float, q: float, b: float, m: float, m1: float):
    ap = 1.0 / p

    if m == 0.0 or b == 0.0:

        def f(t, omt):
            return one_minus_power(t, omt, q) ** -ap

    else:

        def f(t, omt):
            w = one_minus_power(t, omt, q)
            return w**-ap * (m1 + m * w) ** -b

    return f


def density(p: float, q: float, b: float, m: float, m1: float, s: float, delta: float) -> float:
    w = omp(s, delta, q)
    out = w ** (-1.0 / p)
    if m != 0.0 and b != 0.0:
        out *= (m1 + m * w) ** -b
    return out


def head(p, q, b, m, m1, s: float) -> float:
    """Integral of the density over (0, s)."""
    if s <= 0.0:
        return 0.0
    return integrate_0x(integrand(p, q, b, m, m1), s, INNER_TOL).value


def tail(p, q, b, m, m1, delta: float) -> float:
    """Integral of the density over (1 - delta, 1)."""
    if delta <= 0.0:
        return 0.0
    return integrate_x1(integrand(p, q, b, m, m1), 1.0 - delta, INNER_TOL, omx=delta).value


@lru_cache(maxsize=4096)
def half_value(p, q, b, m, m1) -> float:
    return head(p, q, b, m, m1, 0.5)


def split(p, q, b, m, m1, total: float, s: float, delta: float) -> float:
    """Integral over (0, s), via the complement when s is past one half."""
    if s <= 0.5:
        return head(p, q, b, m, m1, s)
    return total - tail(p, q, b, m, m1, delta)


def invert(p, q, b, m, m1, x: float, gap: float) -> tuple[float, float]:
    """Solve ``integral over (0, s) = x`` for the pair (s, 1 - s).

    ``gap = total - x`` is passed separately so that arguments close to the
    complete value keep their relative accuracy. Below ``s = 1/2`` this is a
    safeguarded Newton iteration in ``s``; above it, Newton runs on
    ``log(tail(delta)) = log(gap)`` in the variable ``log(delta)``, where the
    tail integral behaves like a power of ``delta`` and the equation is nearly
    linear. Either iteration falls back to bisection whenever a step leaves
    the current bracket.
    """
    if x <= 0.0:
        return 0.0, 1.0
    if gap <= 0.0:
        return 1.0, 0.0
    if x <= half_value(p, q, b, m, m1):
        lo, hi = 0.0, min(x, 0.5)
        s = hi
        for _ in range(NEWTON_MAX_ITER):
            g = head(p, q, b, m, m1, s) - x
            if g == 0.0:
                break
            if g > 0.0:
                hi = s
            else:
                lo = s
            new = s - g / density(p, q, b, m, m1, s, 1.0 - s)
            if abs(new - s) <= STEP_TOL:
                s = min(max(new, 0.0), 0.5)
                break
            if not lo < new < hi:
                new = 0.5 * (lo + hi)
            s = new
        return s, 1.0 - s

    pstar = p / (p - 1.0)
    target = math.log(gap)
    # leading order of the tail near t = 1: (q u)**(-1/p) m1**(-b), integrated
    guess = (gap * q ** (1.0 / p) * m1**b / pstar) ** pstar
    if guess < _TINY:
        # relative error of the leading order is O(delta / m1) here
        return 1.0, guess
    lo, hi = math.log(_TINY) - 5.0, math.log(0.5)
    lam = math.log(min(guess, 0.5))
    for _ in range(NEWTON_MAX_ITER):
        delta = math.exp(lam)
        t = tail(p, q, b, m, m1, delta)
        g = math.log(t) - target
        if g == 0.0:
            break
        if g > 0.0:
            hi = lam
        else:
            lo = lam
        slope = delta * density(p, q, b, m, m1, 1.0 - delta, delta) / t
        new = lam - g / slope
        if abs(new - lam) <= LOG_STEP_TOL:
            lam = min(new, math.log(0.5))
            break
        if not lo < new < hi:
            new = 0.5 * (lo + hi)
        lam = new
    delta = math.exp(lam)
    return 1.0 - delta, delta


def fold(x: float, quarter: float) -> tuple[float, float, int, int]:
    """Reduce ``x`` against the quarter period.

    Returns ``(r, gap, sn_sign, cn_sign)`` with ``r`` in [0, quarter],
    ``gap = quarter - r`` computed without cancellation, and the signs that
    the odd/even, anti-periodic extension attaches to sn and cn.
    """
    odd = 1
    if x < 0.0:
        x = -x
        odd = -1
    y = math.fmod(x, 4.0 * quarter)
    j = min(int(y // quarter), 3)
    w = y - j * quarter
    if w > quarter:
        w = quarter
    if j % 2 == 0:
        r, gap = w, quarter - w
    else:
        r, gap = quarter - w, w
    sn_sign = odd * (1 if j < 2 else -1)
    cn_sign = 1 if j in (0, 3) else -1
    return r, gap, sn_sign, cn_sign
