"""The Legendre-type relation and the derivative formulas behind it.

With ``k' = (1 - k**q)**(1/r)``, the primed integrals ``K'``, ``E'`` are
those of the swapped triple (p, r, q) at modulus ``k'``; since
``k'**r = 1 - k**q`` they are evaluated at the complementary power directly.
"""

from __future__ import annotations

import math

from ..errors import DomainError
from ..gjef import Modulus, ParamTriple, _complete, _triple
from ..gtf import pi_pq
from ..specfun import beta

__all__ = [
    "legendre_L",
    "legendre_constant",
    "derivative_residuals",
    "derivative_pair",
    "wronskian_invariant",
    "y_ode_residual",
    "FD_STEP",
    "FD2_STEP",
]

#: Central-difference step for first derivatives.
FD_STEP = 1e-5
#: Central-difference step for second derivatives.
FD2_STEP = 1e-4
_WHICH = ("dK", "dE", "dKprime", "dEprime")


def _four(pt: ParamTriple, k: float) -> tuple[float, float, float, float, Modulus]:
    """K, E, K', E' at ``k``."""
    mod = Modulus.of(k, pt)
    m, m1 = mod.k_pow_q, mod.comp_pow
    p, q, r = pt.p, pt.q, pt.r
    return (
        _complete(p, q, r, m, m1, False, "auto"),
        _complete(p, q, r, m, m1, True, "auto"),
        _complete(p, r, q, m1, m, False, "auto"),
        _complete(p, r, q, m1, m, True, "auto"),
        mod,
    )


def _open_k(k: float) -> float:
    k = float(k)
    if not (0.0 < k < 1.0):
        raise DomainError(f"k must lie in (0, 1), got {k!r}")
    return k


def legendre_L(pt, k: float) -> float:
    """L(k) = E K' + K E' - K K'."""
    pt = _triple(pt)
    big_k, big_e, kp, ep, _ = _four(pt, _open_k(k))
    return big_e * kp + big_k * ep - big_k * kp


def legendre_constant(pt) -> float:
    """The value of L(k): (pi_{p,q} / (2 r)) B(1/p* + 1/q, 1/r)."""
    pt = _triple(pt)
    return pi_pq((pt.p, pt.q)) / (2.0 * pt.r) * beta(1.0 - 1.0 / pt.p + 1.0 / pt.q, 1.0 / pt.r)


def _closed_derivatives(pt: ParamTriple, k: float) -> tuple[float, float, float, float]:
    big_k, big_e, kp, ep, mod = _four(pt, k)
    q, r, a = pt.q, pt.r, pt.alpha
    m, m1 = mod.k_pow_q, mod.comp_pow  # m1 = k'**r
    dk = (-(a * q - m) * big_k + a * q * big_e) / (k * m1)
    de = q * (big_e - big_k) / (r * k)
    dkp = q * ((a * r - m1) * kp - a * r * ep) / (r * k * m1)
    dep = k ** (q - 1.0) * (kp - ep) / m1
    return dk, de, dkp, dep


def _central(f, k: float, h: float = FD_STEP) -> float:
    return (f(k + h) - f(k - h)) / (2.0 * h)


def derivative_pair(pt, k: float, which: str) -> tuple[float, float]:
    """(central difference, closed form) for one of dK, dE, dKprime, dEprime."""
    pt = _triple(pt)
    if which not in _WHICH:
        raise DomainError(f"which must be one of {_WHICH}, got {which!r}")
    k = float(k)
    if not (FD2_STEP * 10 < k < 1.0 - FD2_STEP * 10):
        raise DomainError(f"k must lie in (1e-3, 1 - 1e-3), got {k!r}")
    idx = _WHICH.index(which)
    fd = _central(lambda t: _four(pt, t)[idx], k)
    return fd, _closed_derivatives(pt, k)[idx]


def derivative_residuals(pt, k: float, which: str) -> float:
    """|finite difference - closed form| for the chosen derivative."""
    fd, closed = derivative_pair(pt, k, which)
    return abs(fd - closed)


def _y1(pt: ParamTriple, k: float) -> float:
    return _four(pt, k)[0]


def _y2(pt: ParamTriple, k: float) -> float:
    _, _, kp, _, mod = _four(pt, k)
    kc = mod.comp_rq
    return k ** (pt.q / pt.p - 1.0) * kc ** (1.0 - pt.r / pt.p) * kp


def wronskian_invariant(pt, k: float) -> tuple[float, float]:
    """(k^(2 - q/p) k'^(r/p + r - 1) W(y1, y2), -alpha q L(k)).

    ``y1 = K(k)`` and ``y2 = k^(q/p - 1) k'^(1 - r/p) K'(k)``; the Wronskian
    uses central differences. The two entries agree for every k.
    """
    pt = _triple(pt)
    k = _open_k(k)
    y1 = _y1(pt, k)
    y2 = _y2(pt, k)
    d1 = _central(lambda t: _y1(pt, t), k)
    d2 = _central(lambda t: _y2(pt, t), k)
    w = y1 * d2 - d1 * y2
    kc = Modulus.of(k, pt).comp_rq
    lhs = k ** (2.0 - pt.q / pt.p) * kc ** (pt.r / pt.p + pt.r - 1.0) * w
    return lhs, -pt.alpha * pt.q * legendre_L(pt, k)


def y_ode_residual(pt, k: float, which: str) -> float:
    """Residual of the second-order equation shared by y1 and y2.

    k k'^r y'' + (2 - q/p - (2 + q/r*) k^q) y' - (q/r*) k^(q-1) y
    with both derivatives by central differences of step 1e-4.
    """
    pt = _triple(pt)
    k = _open_k(k)
    if which == "y1":
        f = lambda t: _y1(pt, t)  # noqa: E731
    elif which == "y2":
        f = lambda t: _y2(pt, t)  # noqa: E731
    else:
        raise DomainError(f"which must be 'y1' or 'y2', got {which!r}")
    h = FD2_STEP
    if not (h < k < 1.0 - h):
        raise DomainError(f"k too close to an endpoint for step {h}: {k!r}")
    f0, fp, fm = f(k), f(k + h), f(k - h)
    d1 = (fp - fm) / (2.0 * h)
    d2 = (fp - 2.0 * f0 + fm) / (h * h)
    mod = Modulus.of(k, pt)
    ir_star = 1.0 - 1.0 / pt.r
    q = pt.q
    res = (
        k * mod.comp_pow * d2
        + (2.0 - q / pt.p - (2.0 + q * ir_star) * mod.k_pow_q) * d1
        - q * ir_star * k ** (q - 1.0) * f0
    )
    return abs(res)
