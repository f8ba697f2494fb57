"""Residuals of the p-Laplacian type equations satisfied by sn, cn and dn.

Each equation has the form ``(phi_a(y'))' + N(y) = 0``. The inner derivative
``y'`` is taken from the exact differentiation formulas for sn, cn, dn and
the outer derivative by a central difference.
"""

from __future__ import annotations

import math

from ..errors import DomainError
from ..gjef import K_pqr, Modulus, ParamTriple, _modulus, _triple, phi, sncndn
from .legendre import FD_STEP

__all__ = ["ode_residual", "ode_sides", "EQUATIONS", "MIN_ZERO_DISTANCE"]

EQUATIONS = ("snode", "allencahn", "cnode", "cnallencahn", "dnode", "dnallencahn")
#: Points closer than this to a zero of y' are refused.
MIN_ZERO_DISTANCE = 1e-3
_REL = 1e-12


def _close(a: float, b: float) -> bool:
    return abs(a - b) <= _REL * max(abs(a), abs(b))


def _require(pt: ParamTriple, which: str) -> None:
    if which == "allencahn" and not _close(pt.r, pt.p_star):
        raise DomainError(f"allencahn needs r = p* = {pt.p_star!r}, got r = {pt.r!r}")
    if which == "cnallencahn" and not _close(pt.r, pt.q):
        raise DomainError(f"cnallencahn needs r = q, got (q, r) = ({pt.q!r}, {pt.r!r})")
    if which == "dnallencahn" and not _close(pt.q, pt.p_star):
        raise DomainError(f"dnallencahn needs q = p* = {pt.p_star!r}, got q = {pt.q!r}")


def _zero_offset(which: str) -> float:
    """Zeros of y' sit at (offset + j) K for integer j, in units of K."""
    if which in ("snode", "allencahn"):
        return 1.0  # cn = 0: odd multiples of K
    if which in ("cnode", "cnallencahn"):
        return 0.0  # sn = 0: even multiples of K
    return -1.0  # sn cn = 0: every multiple of K


def _check_point(x: float, big_k: float, which: str) -> None:
    off = _zero_offset(which)
    if off < 0.0:
        t = x / big_k
        d = abs(t - round(t)) * big_k
    else:
        t = (x / big_k - off) / 2.0
        d = abs(t - round(t)) * 2.0 * big_k
    if d < MIN_ZERO_DISTANCE:
        raise DomainError(f"x = {x!r} is within {MIN_ZERO_DISTANCE} of a zero of y'")


def _pieces(pt: ParamTriple, mod: Modulus, which: str):
    """Return (outer exponent, x -> y, x -> y')."""
    p, q, r = pt.p, pt.q, pt.r
    m = mod.k_pow_q
    if which in ("snode", "allencahn"):
        def y(x):
            return sncndn(pt, mod, x)[0]

        def dy(x):
            _, c, d = sncndn(pt, mod, x)
            return c * d

        return p, y, dy
    if which in ("cnode", "cnallencahn"):
        def y(x):
            return phi(p, sncndn(pt, mod, x)[1])

        def dy(x):
            s, _, d = sncndn(pt, mod, x)
            return -(q / pt.p_star) * phi(q, s) * d

        return pt.q_star, y, dy

    def y(x):
        return sncndn(pt, mod, x)[2] ** (pt.r_star - 1.0)

    def dy(x):
        s, c, _ = sncndn(pt, mod, x)
        return -(q / r) * m * phi(q, s) * c

    return pt.q_star, y, dy


def _nonlinear(pt: ParamTriple, mod: Modulus, which: str, y: float) -> float:
    p, q, r = pt.p, pt.q, pt.r
    ps, qs, rs = pt.p_star, pt.q_star, pt.r_star
    m = mod.k_pow_q
    if which == "snode":
        ay = abs(y) ** q
        g = p / rs
        return (q / ps) * phi(q, y) * (1.0 - m * ay) ** (g - 1.0) * (1.0 + g * m - (1.0 + g) * m * ay)
    if which == "allencahn":
        return (q / ps) * phi(q, y) * (1.0 + m - 2.0 * m * abs(y) ** q)
    if which == "cnode":
        ay = abs(y) ** ps
        g = qs / rs
        return (
            (q / ps) ** (qs - 1.0)
            * phi(ps, y)
            * (1.0 - m + m * ay) ** (g - 1.0)
            * (1.0 - (1.0 + g) * m + (1.0 + g) * m * ay)
        )
    if which == "cnallencahn":
        return (q / ps) ** (qs - 1.0) * phi(ps, y) * (1.0 - 2.0 * m + 2.0 * m * abs(y) ** ps)
    if which == "dnode":
        yr = y**r
        g = qs / p
        kq_star = m ** (qs / q)
        return (
            (q / r) ** (qs - 1.0)
            * kq_star
            * y ** (r - 1.0)
            * ((yr - mod.comp_pow) / m) ** (g - 1.0)
            * (1.0 - (1.0 + g) / m + (1.0 + g) * yr / m)
        )
    # dnallencahn, with q = p*: k^(p*) = m and k^p = m^(p/p*)
    return (ps / r) ** (p - 1.0) * m ** (p / q) * y ** (r - 1.0) * (1.0 - 2.0 / m + 2.0 * y**r / m)


def ode_sides(pt, k, which: str, x: float) -> tuple[float, float]:
    """``((phi_a(y'))'`` by central difference, ``-N(y))``; equal in exact arithmetic."""
    pt = _triple(pt)
    mod = _modulus(k, pt)
    if which not in EQUATIONS:
        raise DomainError(f"which must be one of {EQUATIONS}, got {which!r}")
    _require(pt, which)
    if which in ("dnode", "dnallencahn") and mod.k_pow_q == 0.0:
        raise DomainError(f"{which} needs k > 0")
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    _check_point(x, K_pqr(pt, mod), which)
    expo, y, dy = _pieces(pt, mod, which)
    h = FD_STEP
    outer = (phi(expo, dy(x + h)) - phi(expo, dy(x - h))) / (2.0 * h)
    return outer, -_nonlinear(pt, mod, which, y(x))


def ode_residual(pt, k, which: str, x: float) -> float:
    """|(phi_a(y'))' + N(y)| at ``x`` for one of the six equations."""
    lhs, rhs = ode_sides(pt, k, which, x)
    return abs(lhs - rhs)
