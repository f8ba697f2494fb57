"""Scalar special-function kernels.

Log-gamma, gamma, beta, the Pochhammer symbol, and series evaluation of
Gauss's 2F1 and Appell's F1 on the real line.

The hypergeometric routines return a :class:`SeriesResult` carrying the
partial sum together with honest convergence metadata; a series that did not
converge is reported as such rather than returned as a bare float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "SeriesResult",
    "log_gamma",
    "gamma",
    "beta",
    "pochhammer",
    "gauss_2f1",
    "appell_f1",
    "DEFAULT_TOL",
    "SERIES_X_MAX",
]

DEFAULT_TOL = 1e-12
#: 2F1 refuses |x| beyond this; convergence near the unit circle is too slow.
SERIES_X_MAX = 0.99
MAX_TERMS = 10**6
MAX_DIAGONALS = 10**5

# Lanczos approximation, g = 607/128 with 15 coefficients (Godfrey).
# Relative error of Gamma is below 1e-15 for Re(s) > 0.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_COEF = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
_HALF_LOG_2PI = 0.91893853320467274178

_EULER_GAMMA = 0.5772156649015328606065121

# zeta(k) - 1 for k = 2..30, used by the expansion of log Gamma(2 + x).
_ZETA_M1 = (
    0.64493406684822643647,
    0.2020569031595942854,
    0.082323233711138191516,
    0.036927755143369926331,
    0.017343061984449139715,
    0.0083492773819228268398,
    0.0040773561979443393787,
    0.0020083928260822144179,
    0.00099457512781808533715,
    0.0004941886041194645587,
    0.00024608655330804829864,
    0.00012271334757848914675,
    0.000061248135058704829259,
    0.000030588236307020493552,
    0.000015282259408651871733,
    7.6371976378997622736e-6,
    3.8172932649998398565e-6,
    1.9082127165539389257e-6,
    9.5396203387279611315e-7,
    4.7693298678780646312e-7,
    2.3845050272773299e-7,
    1.1921992596531107307e-7,
    5.9608189051259479612e-8,
    2.9803503514652280186e-8,
    1.4901554828365041235e-8,
    7.450711789835429492e-9,
    3.7253340247884570548e-9,
    1.8626597235130490064e-9,
    9.3132743241966818287e-10,
)


@dataclass(frozen=True)
class SeriesResult:
    """Outcome of a hypergeometric series evaluation.

    ``est_error`` is an absolute estimate of the truncated tail. When
    ``converged`` is false the value must not be trusted; it is NaN when the
    series was refused outright.
    """

    value: float
    terms_used: int
    converged: bool
    est_error: float

    def __float__(self) -> float:
        return self.value


def _lgamma_2px(x: float) -> float:
    """log Gamma(2 + x) for |x| <= 0.5, free of cancellation near x = 0."""
    total = 0.0
    xk = -x
    for k, z in enumerate(_ZETA_M1, start=2):
        xk *= -x
        total += z * xk / k
    return x * (1.0 - _EULER_GAMMA) + total


def _lanczos_log_gamma(s: float) -> float:
    z = s - 1.0
    acc = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * math.log(t) - t + math.log(acc)


def log_gamma(s: float) -> float:
    """Natural log of Gamma(s) for real s > 0.

    Uses a zeta-series expansion on (0, 2.5], where the zeros at s = 1 and
    s = 2 make a Lanczos sum lose relative accuracy, and the Lanczos
    approximation above that.
    """
    if not (s > 0.0) or not math.isfinite(s):
        raise DomainError(f"log_gamma requires finite s > 0, got {s!r}")
    if s > 2.5:
        return _lanczos_log_gamma(s)
    if s >= 1.5:
        return _lgamma_2px(s - 2.0)
    if s >= 0.5:
        return _lgamma_2px(s - 1.0) - math.log1p(s - 1.0)
    return _lgamma_2px(s) - math.log1p(s) - math.log(s)


def gamma(s: float) -> float:
    """Gamma(s) for real s > 0."""
    return math.exp(log_gamma(s))


def beta(x: float, y: float) -> float:
    """Euler beta function B(x, y) for x, y > 0."""
    if not (x > 0.0 and y > 0.0):
        raise DomainError(f"beta requires x, y > 0, got ({x!r}, {y!r})")
    return math.exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y))


def pochhammer(zeta, n: int):
    """Rising factorial (zeta)_n = zeta (zeta + 1) ... (zeta + n - 1).

    Integer ``zeta`` gives an exact integer result.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:
        raise DomainError(f"pochhammer requires a non-negative integer n, got {n!r}")
    out = 1 if isinstance(zeta, (int, np.integer)) and not isinstance(zeta, bool) else 1.0
    for j in range(int(n)):
        out *= zeta + j
    return out


def _is_nonpositive_integer(c: float) -> bool:
    return c <= 0 and float(c).is_integer()


def _tail_estimate(term: float, rho: float) -> float:
    if rho >= 1.0:
        return math.inf
    return abs(term) * rho / (1.0 - rho)


def gauss_2f1(
    alpha: float,
    beta: float,
    gamma: float,
    x: float,
    tol: float = DEFAULT_TOL,
    max_terms: int = MAX_TERMS,
) -> SeriesResult:
    """Gauss hypergeometric series F(alpha, beta; gamma; x) for |x| < 1.

    Summation stops once three consecutive terms are each below
    ``tol * |partial sum|`` and the geometric bound on the remaining tail is
    below ``tol * max(1, |partial sum|)``. For ``x > SERIES_X_MAX`` the series
    is refused: the result has ``converged=False`` and a NaN value, and the
    caller is expected to fall back to quadrature.
    """
    if _is_nonpositive_integer(gamma):
        raise DomainError(f"2F1 undefined for gamma = {gamma!r}")
    if not abs(x) < 1.0:
        raise DomainError(f"2F1 series requires |x| < 1, got {x!r}")
    if x > SERIES_X_MAX:
        return SeriesResult(math.nan, 0, False, math.inf)

    total = 1.0
    comp = 0.0
    term = 1.0
    small = 0
    ax = abs(x)
    for n in range(max_terms - 1):
        term *= (alpha + n) * (beta + n) / ((gamma + n) * (n + 1)) * x
        # Neumaier-compensated accumulation
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        total = t
        s = total + comp
        if term == 0.0:
            return SeriesResult(s, n + 2, True, 0.0)
        if abs(term) < tol * abs(s):
            small += 1
        else:
            small = 0
        if small >= 3:
            m = n + 1
            ratio = abs((alpha + m) * (beta + m) / ((gamma + m) * (m + 1)) * x)
            est = _tail_estimate(term, max(ratio, ax))
            if est <= tol * max(1.0, abs(s)):
                return SeriesResult(s, n + 2, True, est)
    s = total + comp
    return SeriesResult(s, max_terms, False, _tail_estimate(term, ax))


def appell_f1(
    alpha: float,
    beta: float,
    beta2: float,
    gamma: float,
    x: float,
    y: float,
    tol: float = DEFAULT_TOL,
    max_diagonals: int = MAX_DIAGONALS,
) -> SeriesResult:
    """Appell's F1(alpha; beta, beta2; gamma; x, y) for |x|, |y| < 1.

    The double series is summed along anti-diagonals m + n = s; each diagonal
    is one dot product, and the stopping rule of :func:`gauss_2f1` is applied
    to the diagonal sums. ``terms_used`` counts diagonals.
    """
    if _is_nonpositive_integer(gamma):
        raise DomainError(f"F1 undefined for gamma = {gamma!r}")
    if not (abs(x) < 1.0 and abs(y) < 1.0):
        raise DomainError(f"F1 series requires |x|, |y| < 1, got ({x!r}, {y!r})")

    cap = 256
    u = np.empty(cap)
    v = np.empty(cap)
    u[0] = v[0] = 1.0
    built = 1

    def grow(upto: int) -> None:
        nonlocal u, v, cap, built
        if upto >= cap:
            cap = max(2 * cap, upto + 1)
            u = np.resize(u, cap)
            v = np.resize(v, cap)
        for j in range(built, upto + 1):
            u[j] = u[j - 1] * (beta + j - 1) * x / j
            v[j] = v[j - 1] * (beta2 + j - 1) * y / j
        built = upto + 1

    rho_inf = max(abs(x), abs(y))
    total = 1.0
    comp = 0.0
    coef = 1.0
    prev = 1.0
    small = 0
    for s in range(1, max_diagonals):
        coef *= (alpha + s - 1) / (gamma + s - 1)
        grow(s)
        diag = coef * float(np.dot(u[: s + 1], v[s::-1]))
        t = total + diag
        if abs(total) >= abs(diag):
            comp += (total - t) + diag
        else:
            comp += (diag - t) + total
        total = t
        val = total + comp
        if diag == 0.0 and coef == 0.0:
            return SeriesResult(val, s + 1, True, 0.0)
        if abs(diag) < tol * abs(val):
            small += 1
        else:
            small = 0
        if small >= 3:
            rho = rho_inf
            if prev != 0.0:
                rho = max(rho, abs(diag / prev))
            est = _tail_estimate(diag, rho)
            if est <= tol * max(1.0, abs(val)):
                return SeriesResult(val, s + 1, True, est)
        prev = diag
    val = total + comp
    return SeriesResult(val, max_diagonals, False, _tail_estimate(prev, rho_inf))
