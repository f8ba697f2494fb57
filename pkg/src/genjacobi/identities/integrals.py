"""Integrals of powers of sn, cn and dn over a quarter period.

Closed forms go through Appell's F1 (incomplete) and Gauss's 2F1
(complete); the Wallis-type formulas specialise them to a single function,
and the second Wallis formula runs the three-term recurrence in the powers
of sn as a product of 2 x 2 matrices seeded with K and E.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, EvaluationError
from ..gjef import ParamTriple, _complete, _modulus, _triple, sn_with_complement, K_pqr
from ..gtf import conjugate, pi_extended
from ..quadrature import integrate_01, integrate_0x, one_minus_power
from ..specfun import SERIES_X_MAX, appell_f1, beta, gauss_2f1, pochhammer

__all__ = [
    "power_integral_incomplete",
    "power_integral_complete",
    "power_integral_quadrature",
    "wallis_I",
    "sn_power_recurrence_residual",
    "recurrence_terms",
    "WallisMatrixState",
    "wallis_matrix",
    "wallis_II_sn",
]

SERIES_TOL = 1e-15
QUAD_TOL = 1e-14
#: The incomplete integral leaves the F1 series beyond sn**q = F1_CAP.
F1_CAP = 0.999
_KINDS = ("sn", "cn", "dn")


def _substituted(pt: ParamTriple, m: float, m1: float, a: float, b: float, c: float):
    # sn^a cn^b dn^c dx with t = sn: t^a (1 - t^q)^((b-1)/p) (1 - m t^q)^((c-1)/r*)
    eb = (b - 1.0) / pt.p
    ec = (c - 1.0) * (1.0 - 1.0 / pt.r)
    q = pt.q

    def f(t, omt):
        w = one_minus_power(t, omt, q)
        out = np.power(t, a) * np.power(w, eb)
        if m != 0.0 and ec != 0.0:
            out = out * np.power(m1 + m * w, ec)
        return out

    return f


def power_integral_quadrature(pt, k, a: float, b: float, c: float, x: float | None = None) -> float:
    """Integral of sn^a cn^b dn^c over (0, x) by direct quadrature.

    ``x=None`` means the full quarter period. The substitution ``t = sn``
    turns the integrand into powers of ``t``, ``1 - t**q`` and
    ``1 - k**q t**q``.
    """
    pt = _triple(pt)
    mod = _modulus(k, pt)
    f = _substituted(pt, mod.k_pow_q, mod.comp_pow, a, b, c)
    if x is None:
        return integrate_01(f, QUAD_TOL).value
    s, delta = sn_with_complement(pt, mod, x)
    if s <= 0.0:
        return 0.0
    if delta == 0.0:
        return integrate_01(f, QUAD_TOL).value
    return integrate_0x(f, s, QUAD_TOL, omx=delta).value


def power_integral_incomplete(pt, k, a: float, b: float, c: float, x: float) -> float:
    """Integral of sn^a cn^b dn^c over (0, x) for 0 <= x < K, via Appell's F1.

    Past ``sn**q = 0.999`` the double series converges too slowly and the
    integral is computed by quadrature instead.
    """
    pt = _triple(pt)
    mod = _modulus(k, pt)
    if not a > -1.0:
        raise DomainError(f"power integral requires a > -1, got {a!r}")
    big_k = K_pqr(pt, mod)
    if not (0.0 <= x < big_k):
        raise DomainError(f"x must lie in [0, K) = [0, {big_k!r}), got {x!r}")
    if x == 0.0:
        return 0.0
    s, _ = sn_with_complement(pt, mod, x)
    sq = s**pt.q
    if sq <= F1_CAP:
        res = appell_f1(
            (a + 1.0) / pt.q,
            (1.0 - b) / pt.p,
            (1.0 - c) * (1.0 - 1.0 / pt.r),
            (a + 1.0) / pt.q + 1.0,
            sq,
            mod.k_pow_q * sq,
            SERIES_TOL,
        )
        if res.converged:
            return s ** (a + 1.0) / (a + 1.0) * res.value
    return power_integral_quadrature(pt, mod, a, b, c, x)


def _hyp(alpha: float, beta_: float, gamma: float, m: float) -> float:
    res = gauss_2f1(alpha, beta_, gamma, m, SERIES_TOL)
    if not res.converged:
        raise EvaluationError(f"hypergeometric series did not converge at k**q = {m!r}")
    return res.value


def power_integral_complete(pt, k, a: float, b: float, c: float) -> float:
    """Integral of sn^a cn^b dn^c over (0, K) as Beta times Gauss 2F1.

    Requires ``a > -1`` and ``b > 1 - p``. For ``k**q > 0.99`` the series is
    not used and the integral is computed by quadrature.
    """
    pt = _triple(pt)
    mod = _modulus(k, pt)
    if not a > -1.0:
        raise DomainError(f"power integral requires a > -1, got {a!r}")
    if not b > 1.0 - pt.p:
        raise DomainError(f"complete power integral requires b > 1 - p, got {b!r}")
    m = mod.k_pow_q
    x1 = (a + 1.0) / pt.q
    y1 = (b - 1.0) / pt.p + 1.0
    if m > SERIES_X_MAX:
        return power_integral_quadrature(pt, mod, a, b, c)
    f = 1.0 if m == 0.0 else _hyp(x1, (1.0 - c) * (1.0 - 1.0 / pt.r), x1 + y1, m)
    return beta(x1, y1) / pt.q * f


def _snap_one(v: float) -> float:
    # (R + 1)/q at the right endpoint R = q - 1 may miss 1 by an ulp
    return 1.0 if abs(v - 1.0) <= 4.0 * np.finfo(float).eps else v


def _check_n(n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")
    return int(n)


def wallis_I(pt, k, kind: str, n: int, R_or_c: float) -> float:
    """First Wallis-type formula for the integral over (0, K).

    ``kind="sn"`` integrates sn^(q n + R) for R in (-1, q - 1];
    ``kind="cn"`` integrates cn^(p n + R) for R in (1 - p, 1];
    ``kind="dn"`` integrates dn^c for any real c (``n`` is ignored).
    """
    pt = _triple(pt)
    mod = _modulus(k, pt)
    n = _check_n(n)
    if kind not in _KINDS:
        raise DomainError(f"kind must be one of {_KINDS}, got {kind!r}")
    p, q, r = pt.p, pt.q, pt.r
    ip_star = 1.0 - 1.0 / p
    ir_star = 1.0 - 1.0 / r
    m = mod.k_pow_q
    R = float(R_or_c)

    if kind == "sn":
        if not (-1.0 < R <= q - 1.0):
            raise DomainError(f"sn remainder must lie in (-1, q - 1], got {R!r}")
        iu = _snap_one((R + 1.0) / q)
        if m > SERIES_X_MAX:
            return power_integral_quadrature(pt, mod, q * n + R, 0.0, 0.0)
        coef = pochhammer(iu, n) / ((R + 1.0) * pochhammer(ip_star + iu, n))
        f = 1.0 if m == 0.0 else _hyp(iu + n, ir_star, ip_star + iu + n, m)
        return coef * pi_extended(p, 1.0 / iu) / 2.0 * f

    if kind == "cn":
        if not (1.0 - p < R <= 1.0):
            raise DomainError(f"cn remainder must lie in (1 - p, 1], got {R!r}")
        iv = _snap_one((R + p - 1.0) / p)
        if m > SERIES_X_MAX:
            return power_integral_quadrature(pt, mod, 0.0, p * n + R, 0.0)
        coef = pochhammer(iv, n) / pochhammer(1.0 / q + iv, n)
        f = 1.0 if m == 0.0 else _hyp(1.0 / q, ir_star, 1.0 / q + iv + n, m)
        return coef * pi_extended(conjugate(1.0 / iv), q) / 2.0 * f

    c = R
    if m > SERIES_X_MAX:
        return power_integral_quadrature(pt, mod, 0.0, 0.0, c)
    f = 1.0 if m == 0.0 else _hyp(1.0 / q, (1.0 - c) * ir_star, ip_star + 1.0 / q, m)
    return pi_extended(p, q) / 2.0 * f


def recurrence_terms(pt, k, a: float) -> tuple[float, float, float]:
    """The three terms of the recurrence linking I_a, I_(a+q), I_(a+2q).

    ``I_a`` is the integral of sn^a over a quarter period; the terms are
    returned in the order (I_(a+2q) term, I_(a+q) term, I_a term) and sum
    to zero.
    """
    pt = _triple(pt)
    mod = _modulus(k, pt)
    p_s = 1.0 - 1.0 / pt.p
    m = mod.k_pow_q
    x1 = (a + 1.0) / pt.q
    i0 = power_integral_complete(pt, mod, a, 0.0, 0.0)
    i1 = power_integral_complete(pt, mod, a + pt.q, 0.0, 0.0)
    i2 = power_integral_complete(pt, mod, a + 2.0 * pt.q, 0.0, 0.0)
    t2 = (p_s + x1 + 1.0 / pt.r) * m * i2
    t1 = -(p_s + x1 + (x1 + 1.0 / pt.r) * m) * i1
    t0 = x1 * i0
    return t2, t1, t0


def sn_power_recurrence_residual(pt, k, a: float) -> float:
    """Absolute value of the recurrence combination; zero in exact arithmetic."""
    return abs(math.fsum(recurrence_terms(pt, k, a)))


@dataclass(frozen=True)
class WallisMatrixState:
    """The scaled product A_(n-1) ... A_0 of the second Wallis formula.

    ``W`` is the product with each factor A_j divided by
    ``(j + 1/u + 1/p* + 1/r) k**q``; ``scale`` is the product of those
    divisors, so ``W * scale`` is the unscaled matrix.
    """

    n: int
    W: np.ndarray
    scale: float

    def unscaled(self) -> np.ndarray:
        return self.W * self.scale


def _wallis_setup(pt, k, R: float):
    pt = _triple(pt)
    mod = _modulus(k, pt)
    if not mod.k > 0.0:
        raise DomainError("the second Wallis formula needs k > 0; use wallis_I at k = 0")
    if not (-1.0 < R <= pt.q - 1.0):
        raise DomainError(f"sn remainder must lie in (-1, q - 1], got {R!r}")
    return pt, mod, _snap_one((R + 1.0) / pt.q)


def wallis_matrix(pt, k, n: int, R: float) -> WallisMatrixState:
    """Accumulate the scaled matrix product for ``n`` steps."""
    pt, mod, iu = _wallis_setup(pt, k, float(R))
    n = _check_n(n)
    m = mod.k_pow_q
    ip_star = 1.0 - 1.0 / pt.p
    ir = 1.0 / pt.r
    w = np.eye(2)
    scale = 1.0
    for j in range(n):
        d = (j + iu + ip_star + ir) * m
        a_j = np.array(
            [
                [j + iu + ip_star + (j + iu + ir) * m, -iu - j],
                [(j + iu + ip_star + ir) * m, 0.0],
            ]
        )
        w = (a_j / d) @ w
        scale *= d
    return WallisMatrixState(n, w, scale)


def wallis_II_sn(pt, k, n: int, R: float) -> float:
    """Second Wallis-type formula for the integral of sn^(q n + R) over (0, K).

    The seeds are K and E with exponent ``u`` given by ``1/u = (R + 1)/q``,
    evaluated at the same ``k**q``; ``u = 1`` uses the q = 1 integrals.
    """
    pt, mod, iu = _wallis_setup(pt, k, float(R))
    st = wallis_matrix(pt, mod, n, R)
    m, m1 = mod.k_pow_q, mod.comp_pow
    u = 1.0 / iu
    big_k = _complete(pt.p, u, pt.r, m, m1, False, "auto")
    big_e = _complete(pt.p, u, pt.r, m, m1, True, "auto")
    w21, w22 = st.W[1, 0], st.W[1, 1]
    return ((w21 + m * w22) * big_k - w21 * big_e) / ((float(R) + 1.0) * m)
