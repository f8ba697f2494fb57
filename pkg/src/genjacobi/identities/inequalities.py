"""Binomial-expansion inequalities for sn and cn and the underlying
two-point inequality.

Each check returns the signed margin ``rhs - lhs``. For the sn/cn
inequalities the margin is non-negative when the relevant exponent is at
least 2 and non-positive when it lies in (1, 2]; the same holds for the
two-point inequality with exponent ``p``.
"""

from __future__ import annotations

from ..errors import DomainError
from ..gjef import K_pqr, _modulus, _triple, sncndn

__all__ = ["inequality_check", "inequality_sides", "INEQUALITIES", "mandated_sign"]

INEQUALITIES = ("thm_sn_cn_p", "thm_sn_cn_q", "carlen")


def _two_point(p: float, a: float) -> tuple[float, float]:
    s = a**p + (1.0 - a) ** p
    inner = (2.0 * a ** (p / 2.0) * (1.0 - a) ** (p / 2.0) / s) ** (2.0 / p)
    return 1.0, (1.0 + inner) ** (p - 1.0) * s


def inequality_sides(pt, k, which: str, x_or_alpha: float) -> tuple[float, float]:
    """(lhs, rhs) of the chosen inequality at ``x`` (or ``alpha`` for carlen)."""
    pt = _triple(pt)
    v = float(x_or_alpha)
    if which == "carlen":
        if not (0.0 <= v <= 1.0):
            raise DomainError(f"carlen needs alpha in [0, 1], got {v!r}")
        return _two_point(pt.p, v)
    if which not in INEQUALITIES:
        raise DomainError(f"which must be one of {INEQUALITIES}, got {which!r}")
    mod = _modulus(k, pt)
    big_k = K_pqr(pt, mod)
    if not (0.0 <= v <= big_k):
        raise DomainError(f"x must lie in [0, K] = [0, {big_k!r}], got {v!r}")
    s, c, _ = sncndn(pt, mod, v)
    if which == "thm_sn_cn_p":
        a, b, e = s ** (pt.q / pt.p), c, pt.p
    else:
        a, b, e = s, c ** (pt.p / pt.q), pt.q
    return (a + b) ** (e / (e - 1.0)), 1.0 + 2.0 ** (2.0 / e) * a * b


def inequality_check(pt, k, which: str, x_or_alpha: float) -> float:
    """Signed margin rhs - lhs of the chosen inequality."""
    lhs, rhs = inequality_sides(pt, k, which, x_or_alpha)
    return rhs - lhs


def mandated_sign(pt, which: str) -> int:
    """+1, -1 or 0 (equality) for the sign the margin must have."""
    pt = _triple(pt)
    e = pt.q if which == "thm_sn_cn_q" else pt.p
    if e == 2.0:
        return 0
    return 1 if e > 2.0 else -1
