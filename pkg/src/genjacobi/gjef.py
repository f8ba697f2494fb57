"""Generalized Jacobi elliptic functions with three parameters.

For ``p, q, r > 1`` and a modulus ``k`` in [0, 1),

    H(x, k) = integral over (0, x) of (1 - t**q)**(-1/p) (1 - k**q t**q)**(-(1 - 1/r)) dt,

``K = H(1, k)``, ``sn`` is the inverse of ``H`` on [0, K], and

    cn = (1 - sn**q)**(1/p),    dn = (1 - k**q sn**q)**(1/r*).

The three functions are extended to the real line with the usual parity
and anti-periodicity (sn odd, cn and dn even, sn and cn change sign under a
shift by 2K, dn is 2K-periodic).

Throughout, ``m = k**q`` and its complement ``m1 = 1 - m`` are carried
separately so that moduli close to 1 keep full relative accuracy in ``m1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import _kernel
from .errors import DomainError, EvaluationError
from .gtf import ParamPair, _half_pi, conjugate
from .quadrature import integrate_01, one_minus_power
from .specfun import SERIES_X_MAX, gauss_2f1

__all__ = [
    "ParamTriple",
    "Modulus",
    "H_pqr",
    "K_pqr",
    "E_pqr",
    "K_p1r",
    "E_p1r",
    "sn_pqr",
    "cn_pqr",
    "dn_pqr",
    "sncndn",
    "sn_with_complement",
    "am_pqr",
    "phi",
]

SERIES_TOL = 1e-16
QUAD_TOL = 1e-15
_METHODS = ("auto", "series", "quadrature")


@dataclass(frozen=True)
class ParamTriple:
    p: float
    q: float
    r: float

    def __post_init__(self):
        for name in ("p", "q", "r"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 1.0):
                raise DomainError(f"{name} must be a finite number > 1, got {v!r}")

    @property
    def p_star(self) -> float:
        return conjugate(self.p)

    @property
    def q_star(self) -> float:
        return conjugate(self.q)

    @property
    def r_star(self) -> float:
        return conjugate(self.r)

    @property
    def alpha(self) -> float:
        """1/q + 1/r - 1/p; zero exactly when K and K' are linearly dependent."""
        return 1.0 / self.q + 1.0 / self.r - 1.0 / self.p

    @property
    def pair(self) -> ParamPair:
        return ParamPair(self.p, self.q)

    def swapped(self) -> "ParamTriple":
        """The triple (p, r, q) used by the complementary integrals."""
        return ParamTriple(self.p, self.r, self.q)


def _triple(pt) -> ParamTriple:
    if isinstance(pt, ParamTriple):
        return pt
    p, q, r = pt
    return ParamTriple(float(p), float(q), float(r))


@dataclass(frozen=True)
class Modulus:
    """A modulus ``k`` together with ``k**q`` and ``1 - k**q``.

    ``q`` and ``r`` are the exponents the modulus was built for; ``comp_rq``
    is the complementary modulus ``(1 - k**q)**(1/r)``.
    """

    k: float
    k_pow_q: float
    comp_pow: float
    q: float
    r: float

    def __post_init__(self):
        if not (0.0 <= self.k < 1.0):
            raise DomainError(f"modulus must satisfy 0 <= k < 1, got {self.k!r}")
        if not (0.0 < self.comp_pow <= 1.0):
            raise DomainError(f"1 - k**q must lie in (0, 1], got {self.comp_pow!r}")

    @classmethod
    def of(cls, k: float, pt) -> "Modulus":
        pt = _triple(pt)
        k = float(k)
        if not (0.0 <= k < 1.0):
            raise DomainError(f"modulus must satisfy 0 <= k < 1, got {k!r}")
        if k == 0.0:
            return cls(0.0, 0.0, 1.0, pt.q, pt.r)
        lg = pt.q * math.log(k)
        return cls(k, math.exp(lg), -math.expm1(lg), pt.q, pt.r)

    @classmethod
    def from_pow(cls, m: float, m1: float, pt) -> "Modulus":
        """Build from ``m = k**q`` and its complement given independently."""
        pt = _triple(pt)
        return cls(m ** (1.0 / pt.q), m, m1, pt.q, pt.r)

    @property
    def comp_rq(self) -> float:
        """k' = (1 - k**q)**(1/r)."""
        return self.comp_pow ** (1.0 / self.r)

    @property
    def comp_qr(self) -> float:
        """The other complement, (1 - k**r)**(1/q)."""
        return (-math.expm1(self.r * math.log(self.k))) ** (1.0 / self.q) if self.k else 1.0

    def complementary(self) -> "Modulus":
        """``k'`` as a modulus for the swapped triple (p, r, q)."""
        return Modulus(self.comp_rq, self.comp_pow, self.k_pow_q, self.r, self.q)


def _modulus(k, pt: ParamTriple) -> Modulus:
    if isinstance(k, Modulus):
        if k.q != pt.q or k.r != pt.r:
            raise DomainError(
                f"modulus was built for (q, r) = ({k.q}, {k.r}), not ({pt.q}, {pt.r})"
            )
        return k
    return Modulus.of(k, pt)


def phi(alpha_exp: float, t: float) -> float:
    """|t|**(alpha - 2) t, with phi(0) = 0."""
    if not alpha_exp > 1.0:
        raise DomainError(f"phi requires an exponent > 1, got {alpha_exp!r}")
    if t == 0.0:
        return 0.0
    return math.copysign(abs(t) ** (alpha_exp - 1.0), t)


# ---------------------------------------------------------------------------
# complete integrals


def _check_method(method: str) -> None:
    if method not in _METHODS:
        raise DomainError(f"method must be one of {_METHODS}, got {method!r}")


def _half_pi_ext(p: float, q: float) -> float:
    return conjugate(p) if q == 1.0 else _half_pi(p, q)


def _series(p: float, q: float, r: float, m: float, second: bool) -> float:
    b = -1.0 / r if second else 1.0 - 1.0 / r
    res = gauss_2f1(1.0 / q, b, 1.0 - 1.0 / p + 1.0 / q, m, SERIES_TOL)
    if not res.converged:
        raise EvaluationError(f"hypergeometric series did not converge at k**q = {m!r}")
    return _half_pi_ext(p, q) * res.value


def _quad(p: float, q: float, r: float, m: float, m1: float, second: bool) -> float:
    ap = 1.0 / p
    ex = -1.0 / r if second else 1.0 - 1.0 / r

    def f(t, omt):
        w = one_minus_power(t, omt, q)
        return w**-ap * (m1 + m * w) ** -ex

    return integrate_01(f, QUAD_TOL).value


@lru_cache(maxsize=4096)
def _complete(p: float, q: float, r: float, m: float, m1: float, second: bool, method: str) -> float:
    if m == 0.0:
        return _half_pi_ext(p, q)
    if method == "series" or (method == "auto" and m <= SERIES_X_MAX):
        return _series(p, q, r, m, second)
    return _quad(p, q, r, m, m1, second)


def K_pqr(pt, k, method: str = "auto") -> float:
    """Complete integral of the first kind K_{p,q,r}(k).

    ``method="auto"`` sums the hypergeometric series when ``k**q <= 0.99``
    and integrates the definition otherwise.
    """
    pt = _triple(pt)
    mod = _modulus(k, pt)
    _check_method(method)
    return _complete(pt.p, pt.q, pt.r, mod.k_pow_q, mod.comp_pow, False, method)


def E_pqr(pt, k, method: str = "auto") -> float:
    """Complete integral of the second kind E_{p,q,r}(k)."""
    pt = _triple(pt)
    mod = _modulus(k, pt)
    _check_method(method)
    return _complete(pt.p, pt.q, pt.r, mod.k_pow_q, mod.comp_pow, True, method)


def _check_p1r(p: float, r: float, k: float) -> None:
    for name, v in (("p", p), ("r", r)):
        if not (math.isfinite(v) and v > 1.0):
            raise DomainError(f"{name} must be a finite number > 1, got {v!r}")
    if not (0.0 <= k < 1.0):
        raise DomainError(f"modulus must satisfy 0 <= k < 1, got {k!r}")


def K_p1r(p: float, r: float, k: float, method: str = "quadrature") -> float:
    """K_{p,1,r}(k) = integral of (1 - t)**(-1/p) (1 - k t)**(-(1 - 1/r)) over (0, 1)."""
    _check_p1r(p, r, k)
    _check_method(method)
    return _complete(float(p), 1.0, float(r), float(k), 1.0 - k, False, method)


def E_p1r(p: float, r: float, k: float, method: str = "quadrature") -> float:
    """E_{p,1,r}(k) = integral of (1 - t)**(-1/p) (1 - k t)**(1/r) over (0, 1)."""
    _check_p1r(p, r, k)
    _check_method(method)
    return _complete(float(p), 1.0, float(r), float(k), 1.0 - k, True, method)


# ---------------------------------------------------------------------------
# incomplete integral and inverse


def _setup(pt, k) -> tuple[ParamTriple, float, float, float, float]:
    pt = _triple(pt)
    mod = _modulus(k, pt)
    m, m1 = mod.k_pow_q, mod.comp_pow
    # with m = 0 the integrand does not depend on r; use the trigonometric key
    b = 0.0 if m == 0.0 else 1.0 - 1.0 / pt.r
    return pt, b, m, m1, _complete(pt.p, pt.q, pt.r, m, m1, False, "auto")


def H_pqr(pt, k, x: float, omx: float | None = None) -> float:
    """Incomplete integral H_{p,q,r}(x, k) for x in [0, 1].

    ``omx`` may carry ``1 - x`` when it is known to more digits than the
    subtraction gives, as returned by :func:`sn_with_complement`.
    """
    pt, b, m, m1, big_k = _setup(pt, k)
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"H_pqr requires 0 <= x <= 1, got {x!r}")
    if omx is None:
        omx = 1.0 - x
    if omx == 0.0:
        return big_k
    return _kernel.split(pt.p, pt.q, b, m, m1, big_k, x, omx)


def _core(pt, k, x: float):
    pt, b, m, m1, big_k = _setup(pt, k)
    r, gap, s_sign, c_sign = _kernel.fold(float(x), big_k)
    s, delta = _kernel.invert(pt.p, pt.q, b, m, m1, r, gap)
    return pt, m, m1, s, delta, s_sign, c_sign


def sncndn(pt, k, x: float) -> tuple[float, float, float]:
    """(sn, cn, dn) at ``x`` from a single inversion."""
    pt, m, m1, s, delta, s_sign, c_sign = _core(pt, k, x)
    w = _kernel.omp(s, delta, pt.q)
    cn = c_sign * w ** (1.0 / pt.p)
    dn = 1.0 if m == 0.0 else (m1 + m * w) ** (1.0 - 1.0 / pt.r)
    return s_sign * s, cn, dn


def sn_with_complement(pt, k, x: float) -> tuple[float, float]:
    """``(sn, 1 - |sn|)`` with the second entry accurate to full relative precision.

    Close to a quarter period ``1 - |sn|`` behaves like a power ``p*`` of the
    distance to it and drops below the spacing of doubles near 1 long before
    ``sn`` itself stops changing.
    """
    _, _, _, s, delta, s_sign, _ = _core(pt, k, x)
    return s_sign * s, delta


def sn_pqr(pt, k, x: float) -> float:
    """sn_{p,q,r}(x, k) on the whole real line."""
    _, _, _, s, _, s_sign, _ = _core(pt, k, x)
    return s_sign * s


def cn_pqr(pt, k, x: float) -> float:
    """cn_{p,q,r}(x, k) on the whole real line."""
    return sncndn(pt, k, x)[1]


def dn_pqr(pt, k, x: float) -> float:
    """dn_{p,q,r}(x, k) on the whole real line; exactly 1 when k = 0."""
    pt = _triple(pt)
    if _modulus(k, pt).k_pow_q == 0.0:
        return 1.0
    return sncndn(pt, k, x)[2]


def am_pqr(pt, k, x: float) -> float:
    """Amplitude: the angle ``theta`` with sin_{p,q}(theta) = sn_{p,q,r}(x, k)."""
    pt, b, m, m1, big_k = _setup(pt, k)
    if not (0.0 <= x <= big_k):
        raise DomainError(f"am_pqr requires 0 <= x <= K = {big_k!r}, got {x!r}")
    half = _half_pi(pt.p, pt.q)
    if m == 0.0:
        return float(x)
    s, delta = _kernel.invert(pt.p, pt.q, b, m, m1, x, big_k - x)
    if delta == 0.0:
        return half
    return _kernel.split(pt.p, pt.q, 0.0, 0.0, 1.0, half, s, delta)
