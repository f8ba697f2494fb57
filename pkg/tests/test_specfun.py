import math

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frozen import FROZEN
from genjacobi.errors import DomainError
from genjacobi.specfun import (
    MAX_TERMS,
    SeriesResult,
    appell_f1,
    beta,
    gamma,
    gauss_2f1,
    log_gamma,
    pochhammer,
)


def rel(a, b):
    return abs(a - b) / abs(b)


class TestLogGamma:
    def test_one(self):
        assert log_gamma(1.0) == 0.0

    def test_half(self):
        assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-15)

    def test_7_3(self):
        assert rel(log_gamma(7.3), FROZEN["log_gamma_7_3"]) <= 1e-13

    def test_sweep_against_mpmath(self):
        worst = 0.0
        for s in [10 ** (e / 10) for e in range(-30, 31)] + [1.0 + 1e-9, 2.0 - 1e-9, 2.5, 2.500001]:
            ref = float(mp.loggamma(s))
            err = abs(log_gamma(s) - ref) / max(abs(ref), 1e-300)
            worst = max(worst, err)
        assert worst <= 1e-13

    @pytest.mark.parametrize("s", [0.0, -1.0, math.inf, math.nan])
    def test_domain(self, s):
        with pytest.raises(DomainError):
            log_gamma(s)

    def test_gamma_integer(self):
        assert gamma(6.0) == pytest.approx(120.0, rel=1e-14)


class TestBeta:
    def test_unit(self):
        assert beta(1.0, 1.0) == pytest.approx(1.0, rel=1e-15)

    def test_half_half(self):
        assert beta(0.5, 0.5) == pytest.approx(math.pi, rel=1e-14)

    def test_quadrature_value(self):
        assert rel(beta(2 / 3, 1 / 2), FROZEN["beta_2_3_1_2"]) <= 1e-12

    @pytest.mark.parametrize("x,y", [(0.0, 1.0), (1.0, -2.0)])
    def test_domain(self, x, y):
        with pytest.raises(DomainError):
            beta(x, y)


class TestPochhammer:
    def test_empty(self):
        assert pochhammer(3.7, 0) == 1.0

    def test_factorial(self):
        assert pochhammer(1, 5) == 120
        assert isinstance(pochhammer(1, 5), int)

    def test_half(self):
        assert pochhammer(0.5, 3) == 1.875

    @pytest.mark.parametrize("n", [-1, 2.5, True])
    def test_bad_n(self, n):
        with pytest.raises(DomainError):
            pochhammer(1.0, n)

    @given(st.integers(-5, 5), st.integers(0, 8), st.integers(0, 8))
    def test_split_exact(self, z, m, n):
        assert pochhammer(z, m + n) == pochhammer(z, m) * pochhammer(z + m, n)

    @given(st.floats(0.1, 5.0), st.integers(0, 10), st.integers(0, 10))
    def test_split_float(self, z, m, n):
        a = pochhammer(z, m + n)
        b = pochhammer(z, m) * pochhammer(z + m, n)
        assert abs(a - b) <= 1e-14 * abs(a)


class TestGauss:
    def test_zero_argument(self):
        res = gauss_2f1(0.3, -1.7, 2.2, 0.0)
        assert res.value == 1.0 and res.converged

    def test_K(self):
        res = gauss_2f1(0.5, 0.5, 1.0, 0.25)
        assert res.converged
        assert rel(res.value, FROZEN["f21_K"]) <= 1e-13

    def test_E(self):
        res = gauss_2f1(0.5, -0.5, 1.0, 0.25)
        assert rel(res.value, FROZEN["f21_E"]) <= 1e-13

    def test_terminating(self):
        res = gauss_2f1(-2.0, 1.0, 1.0, 0.5)
        assert res.converged and res.value == pytest.approx(0.25, abs=1e-16)
        assert res.est_error == 0.0

    def test_refuses_near_one(self):
        res = gauss_2f1(0.5, 0.5, 1.0, 0.995)
        assert not res.converged and math.isnan(res.value)

    def test_honest_nonconvergence(self):
        res = gauss_2f1(0.5, 0.5, 1.0, 0.98, max_terms=20)
        assert not res.converged
        assert res.terms_used <= 20

    @pytest.mark.parametrize("g", [0.0, -3.0])
    def test_pole(self, g):
        with pytest.raises(DomainError):
            gauss_2f1(0.5, 0.5, g, 0.1)

    def test_outside_disc(self):
        with pytest.raises(DomainError):
            gauss_2f1(0.5, 0.5, 1.0, -1.0)

    def test_type(self):
        res = gauss_2f1(0.5, 0.5, 1.0, 0.5)
        assert isinstance(res, SeriesResult) and float(res) == res.value
        assert res.terms_used <= MAX_TERMS

    @settings(max_examples=100, deadline=None)
    @given(
        st.floats(-3.0, 3.0),
        st.floats(-3.0, 3.0),
        st.floats(0.2, 4.0),
        st.floats(-0.9, 0.9),
        st.sampled_from([1e-12, 1e-14]),
    )
    def test_converged_bound(self, a, b, c, x, tol):
        res = gauss_2f1(a, b, c, x, tol)
        assert res.converged
        assert res.est_error <= tol * max(1.0, abs(res.value))

    @settings(max_examples=100, deadline=None)
    @given(st.floats(-3.0, 3.0), st.floats(-3.0, 3.0), st.floats(0.2, 4.0), st.floats(-0.9, 0.9))
    def test_symmetric(self, a, b, c, x):
        u = gauss_2f1(a, b, c, x).value
        v = gauss_2f1(b, a, c, x).value
        assert abs(u - v) <= 1e-13 * max(1.0, abs(u))

    @settings(max_examples=100, deadline=None)
    @given(st.floats(0.1, 3.0), st.floats(-2.0, 3.0), st.floats(0.2, 4.0), st.floats(0.05, 0.8))
    def test_contiguous(self, a, b, c, x):
        lhs = gauss_2f1(a + 1, b + 1, c + 1, x, 1e-15).value
        rhs = c / (a * x) * (gauss_2f1(a, b + 1, c, x, 1e-15).value - gauss_2f1(a, b, c, x, 1e-15).value)
        assert abs(lhs - rhs) <= 1e-10 * abs(lhs)

    def test_mpmath_sweep(self):
        for a, b, c, x in [(0.25, 0.5, 1.25, 0.9), (1 / 3, -0.5, 5 / 6, 0.99), (2.5, 1.5, 0.7, -0.8)]:
            assert rel(gauss_2f1(a, b, c, x, 1e-15).value, float(mp.hyp2f1(a, b, c, x))) <= 1e-13


class TestAppell:
    def test_origin(self):
        assert appell_f1(0.3, 0.4, 0.7, 1.1, 0.0, 0.0).value == 1.0

    def test_beta2_zero(self):
        f1 = appell_f1(0.3, 0.4, 0.0, 1.1, 0.5, 0.7).value
        f = gauss_2f1(0.3, 0.4, 1.1, 0.5).value
        assert abs(f1 - f) <= 2e-12

    def test_bruteforce(self):
        res = appell_f1(0.25, 0.5, 0.5, 1.25, 0.36, 0.09)
        assert res.converged
        assert rel(res.value, FROZEN["f1_bf"]) <= 1e-13

    def test_pole(self):
        with pytest.raises(DomainError):
            appell_f1(0.5, 0.5, 0.5, -1.0, 0.1, 0.1)

    def test_outside(self):
        with pytest.raises(DomainError):
            appell_f1(0.5, 0.5, 0.5, 1.5, 1.0, 0.1)

    def test_nonconvergence_reported(self):
        res = appell_f1(0.5, 0.5, 0.5, 1.5, 0.999, 0.5, max_diagonals=10)
        assert not res.converged and res.terms_used <= 10

    @settings(max_examples=100, deadline=None)
    @given(st.floats(0.1, 3.0), st.floats(-2.0, 2.0), st.floats(-2.0, 2.0), st.floats(0.3, 4.0), st.floats(-0.8, 0.8))
    def test_y_zero_reduces(self, a, b, b2, c, x):
        tol = 1e-12
        f1 = appell_f1(a, b, b2, c, x, 0.0, tol).value
        f = gauss_2f1(a, b, c, x, tol).value
        assert abs(f1 - f) <= 2 * tol * max(1.0, abs(f))
