import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frozen import FROZEN
from genjacobi.errors import DomainError
from genjacobi.gjef import (
    E_p1r,
    E_pqr,
    H_pqr,
    K_p1r,
    K_pqr,
    Modulus,
    ParamTriple,
    am_pqr,
    cn_pqr,
    dn_pqr,
    phi,
    sn_pqr,
    sn_with_complement,
    sncndn,
)
from genjacobi.gtf import F_pq, cos_pq, pi_pq, sin_pq
from oracles import agm_K_E, k212_closed

TRIPLES = list(itertools.product((1.5, 2.0, 3.0), repeat=3))


class TestTypes:
    def test_triple(self):
        pt = ParamTriple(3.0, 2.0, 1.5)
        assert pt.r_star == pytest.approx(3.0, rel=1e-15)
        assert pt.swapped() == ParamTriple(3.0, 1.5, 2.0)
        with pytest.raises(DomainError):
            ParamTriple(2.0, 1.0, 2.0)

    def test_alpha_sign(self):
        assert ParamTriple(2.0, 4.0, 4.0).alpha == pytest.approx(0.0, abs=1e-15)
        assert ParamTriple(2.0, 2.0, 2.0).alpha > 0
        assert ParamTriple(2.0, 5.0, 5.0).alpha < 0

    def test_modulus(self):
        mod = Modulus.of(0.6, (2.5, 3.0, 2.0))
        assert mod.k_pow_q == pytest.approx(0.216, rel=1e-15)
        assert mod.k_pow_q + mod.comp_pow == pytest.approx(1.0, abs=1e-16)
        assert mod.comp_rq == pytest.approx(0.784**0.5, rel=1e-15)
        c = mod.complementary()
        assert (c.q, c.r) == (2.0, 3.0) and c.k_pow_q == mod.comp_pow

    def test_modulus_tiny(self):
        mod = Modulus.of(1e-200, (2, 2, 2))
        assert mod.comp_pow == 1.0 and mod.k_pow_q == 0.0

    @pytest.mark.parametrize("k", [-0.1, 1.0, 1.5, math.nan])
    def test_modulus_domain(self, k):
        with pytest.raises(DomainError):
            Modulus.of(k, (2, 2, 2))

    def test_modulus_mismatch(self):
        with pytest.raises(DomainError):
            K_pqr((2, 3, 2), Modulus.of(0.5, (2, 2, 2)))


class TestComplete:
    def test_k_zero(self):
        for pt in TRIPLES:
            assert K_pqr(pt, 0.0) == pytest.approx(pi_pq(pt[:2]) / 2, rel=1e-15)
            assert E_pqr(pt, 0.0) == pytest.approx(pi_pq(pt[:2]) / 2, rel=1e-15)

    def test_classical(self):
        assert K_pqr((2, 2, 2), 0.5) == pytest.approx(FROZEN["K_05"], rel=1e-14)
        assert E_pqr((2, 2, 2), 0.5) == pytest.approx(FROZEN["E_05"], rel=1e-14)

    def test_series_vs_quadrature_K(self):
        s = K_pqr((3, 2, 2), 0.6, method="series")
        q = K_pqr((3, 2, 2), 0.6, method="quadrature")
        assert abs(s - q) <= 1e-12 * s

    def test_series_vs_quadrature_E(self):
        s = E_pqr((2, 3, 2), 0.4, method="series")
        q = E_pqr((2, 3, 2), 0.4, method="quadrature")
        assert abs(s - q) <= 1e-12 * s

    @pytest.mark.parametrize("pt", TRIPLES)
    def test_overlap_region(self, pt):
        # k**q = 0.98 is inside the series region but close to the switch
        k = 0.98 ** (1 / pt[1])
        for f in (K_pqr, E_pqr):
            s, q = f(pt, k, method="series"), f(pt, k, method="quadrature")
            assert abs(s - q) <= 1e-10 * s

    def test_near_one(self):
        # quadrature path beyond the series cap stays monotone
        ks = [0.995, 0.999, 0.9999]
        vals = [K_pqr((2, 2, 2), k) for k in ks]
        assert vals[0] < vals[1] < vals[2]
        for k, v in zip(ks, vals):
            assert v == pytest.approx(agm_K_E(k)[0], rel=1e-12)

    def test_bad_method(self):
        with pytest.raises(DomainError):
            K_pqr((2, 2, 2), 0.5, method="magic")


class TestQEqualsOne:
    def test_closed_forms(self):
        assert K_p1r(2, 2, 0.25) == pytest.approx(2 * math.log(3), rel=1e-13)
        assert E_p1r(2, 2, 0.25) == pytest.approx(1 + 0.75 * math.log(3), rel=1e-13)

    @pytest.mark.parametrize("k", np.linspace(0.1, 0.9, 9))
    def test_closed_grid(self, k):
        ck, ce = k212_closed(k)
        assert abs(K_p1r(2, 2, k) - ck) <= 1e-10 * ck
        assert abs(E_p1r(2, 2, k) - ce) <= 1e-10 * ce

    @pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
    def test_k_zero(self, p):
        assert K_p1r(p, 2.5, 0.0) == pytest.approx(p / (p - 1), rel=1e-14)
        assert E_p1r(p, 2.5, 0.0) == pytest.approx(p / (p - 1), rel=1e-14)

    def test_series_agrees(self):
        a = K_p1r(3.0, 1.5, 0.4, method="series")
        b = K_p1r(3.0, 1.5, 0.4, method="quadrature")
        assert abs(a - b) <= 1e-12 * a


class TestIncomplete:
    def test_zero(self):
        assert H_pqr((3, 2, 2.5), 0.4, 0.0) == 0.0

    @pytest.mark.parametrize("pt", TRIPLES[::4])
    def test_k_zero(self, pt):
        for x in (0.2, 0.7, 0.99):
            assert H_pqr(pt, 0.0, x) == F_pq(pt[:2], x)

    def test_classical(self):
        assert H_pqr((2, 2, 2), 0.5, 0.9) == pytest.approx(FROZEN["H_222_09_05"], rel=1e-13)

    def test_endpoint(self):
        assert H_pqr((1.5, 3, 2), 0.7, 1.0) == K_pqr((1.5, 3, 2), 0.7)

    @pytest.mark.parametrize("x", [-0.01, 1.01])
    def test_domain(self, x):
        with pytest.raises(DomainError):
            H_pqr((2, 2, 2), 0.5, x)


class TestJacobi:
    def test_origin(self):
        for pt in TRIPLES[::5]:
            assert sncndn(pt, 0.5, 0.0) == (0.0, 1.0, 1.0)

    @pytest.mark.parametrize("pt", TRIPLES[::3])
    def test_k_zero(self, pt):
        for x in np.linspace(-3, 7, 23):
            assert sn_pqr(pt, 0.0, x) == pytest.approx(sin_pq(pt[:2], x), abs=1e-15)
            assert cn_pqr(pt, 0.0, x) == pytest.approx(cos_pq(pt[:2], x), abs=1e-15)
            assert dn_pqr(pt, 0.0, x) == 1.0

    def test_dn_exactly_one(self):
        assert dn_pqr((3, 1.5, 2.5), 0.0, 0.77) == 1.0

    def test_classical(self):
        sn, cn, dn = sncndn((2, 2, 2), 0.7, 0.8)
        for got, ref in zip((sn, cn, dn), FROZEN["sn_08_07"]):
            assert got == pytest.approx(ref, rel=1e-13)

    def test_classical_long_range(self):
        sn, cn, dn = sncndn((2, 2, 2), 0.5, 0.8)
        for got, ref in zip((sn, cn, dn), FROZEN["sn_08_05"]):
            assert got == pytest.approx(ref, rel=1e-13)

    @pytest.mark.parametrize("pt", TRIPLES)
    def test_pythagorean(self, pt):
        p, q, r = pt
        rs = r / (r - 1)
        for k in (0.3, 0.95):
            big_k = K_pqr(pt, k)
            for x in np.linspace(0, 4 * big_k, 41):
                sn, cn, dn = sncndn(pt, k, x)
                assert abs(abs(cn) ** p + abs(sn) ** q - 1) <= 1e-12
                assert abs(dn**rs + k**q * abs(sn) ** q - 1) <= 1e-12

    @pytest.mark.parametrize("pt", TRIPLES[::2])
    def test_round_trip(self, pt):
        for k in (0.5, 0.95):
            big_k = K_pqr(pt, k)
            for x in np.linspace(0, big_k * (1 - 1e-6), 25):
                s, d = sn_with_complement(pt, k, x)
                assert abs(H_pqr(pt, k, s, omx=d) - x) <= 1e-9

    @pytest.mark.parametrize("pt", TRIPLES[::2])
    def test_derivative_chain(self, pt):
        p, q, r = pt
        ps, rs = p / (p - 1), r / (r - 1)
        k, h = 0.6, 1e-5
        big_k = K_pqr(pt, k)
        for x in np.linspace(0.05 * big_k, 0.95 * big_k, 9):
            sn, cn, dn = sncndn(pt, k, x)
            lo, hi = sncndn(pt, k, x - h), sncndn(pt, k, x + h)
            assert abs((hi[0] - lo[0]) / (2 * h) - cn * dn) <= 1e-5
            d_cn = (hi[1] ** (p - 1) - lo[1] ** (p - 1)) / (2 * h)
            assert abs(d_cn + q / ps * sn ** (q - 1) * dn) <= 1e-5
            d_dn = (hi[2] ** (rs - 1) - lo[2] ** (rs - 1)) / (2 * h)
            assert abs(d_dn + q / r * k**q * sn ** (q - 1) * cn) <= 1e-5

    def test_c1_across_quarter_period(self):
        pt, k = (1.5, 3.0, 2.0), 0.5
        big_k = K_pqr(pt, k)
        for e in (1e-4, 1e-6):
            left = (sn_pqr(pt, k, big_k - e) - sn_pqr(pt, k, big_k - 2 * e)) / e
            right = (sn_pqr(pt, k, big_k + 2 * e) - sn_pqr(pt, k, big_k + e)) / e
            assert abs(left + right) <= 1e-6 and abs(left) <= 1e-2

    @settings(max_examples=60, deadline=None)
    @given(
        st.sampled_from(TRIPLES),
        st.sampled_from([0.0, 0.3, 0.8]),
        st.floats(-20.0, 20.0),
    )
    def test_extension_symmetry(self, pt, k, x):
        big_k = K_pqr(pt, k)
        sn, cn, dn = sncndn(pt, k, x)
        sn2, cn2, dn2 = sncndn(pt, k, -x)
        assert sn2 == -sn and cn2 == cn and dn2 == dn
        sn3, cn3, dn3 = sncndn(pt, k, x + 2 * big_k)
        scale = 1e-13 * max(1.0, abs(x))
        assert abs(sn3 + sn) <= 1e3 * scale and abs(dn3 - dn) <= 1e3 * scale
        assert dn > 0


class TestAmplitude:
    def test_values(self):
        assert am_pqr((3, 2, 2), 0.5, 0.0) == 0.0
        assert am_pqr((3, 2, 2), 0.0, 0.4) == 0.4
        pt = (3.0, 2.0, 2.5)
        assert am_pqr(pt, 0.6, K_pqr(pt, 0.6)) == pytest.approx(pi_pq((3, 2)) / 2, rel=1e-15)

    def test_classical(self):
        big_k = K_pqr((2, 2, 2), 0.5)
        assert am_pqr((2, 2, 2), 0.5, big_k / 2) == pytest.approx(FROZEN["am_half"], rel=1e-13)

    @pytest.mark.parametrize("pt", TRIPLES[::4])
    def test_sin_of_amplitude(self, pt):
        k = 0.7
        big_k = K_pqr(pt, k)
        for x in np.linspace(0, big_k, 11):
            assert abs(sin_pq(pt[:2], am_pqr(pt, k, x)) - sn_pqr(pt, k, x)) <= 1e-10

    def test_domain(self):
        with pytest.raises(DomainError):
            am_pqr((2, 2, 2), 0.5, -0.1)
        with pytest.raises(DomainError):
            am_pqr((2, 2, 2), 0.5, 10.0)


class TestPhi:
    def test_values(self):
        assert phi(2, -3.5) == -3.5
        assert phi(2.7, 0.0) == 0.0
        assert phi(3, -2) == -4.0

    @given(st.floats(1.01, 6.0), st.floats(-1e3, 1e3))
    def test_odd(self, a, t):
        assert phi(a, -t) == -phi(a, t)

    def test_domain(self):
        with pytest.raises(DomainError):
            phi(1.0, 2.0)
