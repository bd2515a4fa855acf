import cmath
import math

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xipos.errors import AccuracyDomainError, DomainError, NearZeroError, PoleError
from xipos.special_functions import as_point, digamma, log_gamma, zeta, zeta_logderiv

EULER_GAMMA = 0.5772156649015329

# 40-digit mpmath values
LOG_GAMMA_3_4I = complex(-1.756626784603784110530604181623275785157, 4.742664438034657928194889407550022740888)
DIGAMMA_1_10I = complex(2.303419263671412535169217706005055981232, 1.520796326794896619231321693260153536542)
ZETA_LOGDERIV_2 = -0.5699609930945328063998643600197300024035


def points(re_lo, re_hi, im_max):
    return st.builds(
        complex,
        st.floats(re_lo, re_hi, allow_nan=False),
        st.floats(-im_max, im_max, allow_nan=False),
    )


def test_as_point_rejects_non_finite():
    with pytest.raises(DomainError):
        as_point(complex(math.nan, 0))
    with pytest.raises(DomainError):
        as_point(complex(1, math.inf))
    assert as_point(2) == 2 + 0j


class TestLogGamma:
    def test_one_and_half(self):
        assert abs(log_gamma(1)) < 1e-14
        assert abs(log_gamma(0.5) - 0.5 * math.log(math.pi)) < 1e-14

    def test_three_plus_four_i(self):
        assert abs(log_gamma(3 + 4j) - LOG_GAMMA_3_4I) < 1e-12

    @pytest.mark.parametrize("z", [0, -1, -7])
    def test_poles(self, z):
        with pytest.raises(PoleError):
            log_gamma(z)

    @settings(max_examples=60, deadline=None)
    @given(points(-50, 50, 1e4))
    def test_matches_mpmath(self, z):
        if z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real):
            return
        ref = complex(mp.loggamma(mp.mpc(z.real, z.imag)))
        assert abs(log_gamma(z) - ref) <= 1e-10


class TestDigamma:
    def test_small_integers(self):
        assert abs(digamma(1) + EULER_GAMMA) < 1e-14
        assert abs(digamma(2) - (1 - EULER_GAMMA)) < 1e-14

    def test_one_plus_ten_i(self):
        assert abs(digamma(1 + 10j) - DIGAMMA_1_10I) < 1e-13

    def test_pole(self):
        with pytest.raises(PoleError):
            digamma(-3)

    @settings(max_examples=100, deadline=None)
    @given(points(-30, 30, 1e3).filter(lambda z: abs(z.imag) > 1e-3 or z.real > 0.1))
    def test_recurrence(self, z):
        assert abs(digamma(z + 1) - digamma(z) - 1 / z) < 1e-10 * max(1.0, abs(1 / z))


class TestZeta:
    def test_classical_values(self):
        assert abs(zeta(2) - math.pi**2 / 6) < 1e-14
        assert abs(zeta(0) + 0.5) < 1e-14

    def test_first_zero(self):
        assert abs(zeta(complex(0.5, 14.134725))) < 1e-5

    def test_errors(self):
        with pytest.raises(PoleError):
            zeta(1)
        with pytest.raises(AccuracyDomainError):
            zeta(complex(0.5, 2e4))

    @pytest.mark.parametrize("s", [3 + 4j, 0.5 + 1000j, -0.5 + 77j, -3 + 5j, 0.25 + 9999j])
    def test_matches_mpmath(self, s):
        ref = complex(mp.zeta(mp.mpc(s.real, s.imag)))
        assert abs(zeta(s) - ref) <= 1e-10 * max(1.0, abs(ref))

    @settings(max_examples=100, deadline=None)
    @given(points(-0.99, 1.99, 100).filter(lambda s: abs(s - 1) > 1e-3 and abs(s) > 1e-3))
    def test_functional_equation(self, s):
        rhs = 2**s * math.pi ** (s - 1) * cmath.sin(math.pi * s / 2) * cmath.exp(log_gamma(1 - s)) * zeta(1 - s)
        lhs = zeta(s)
        assert abs(lhs - rhs) <= 1e-8 * max(abs(lhs), 1e-3)


class TestZetaLogDeriv:
    def test_at_two(self):
        assert abs(zeta_logderiv(2) - ZETA_LOGDERIV_2) < 1e-13

    def test_real_on_real_axis(self):
        assert abs(zeta_logderiv(3).imag) < 1e-12

    @pytest.mark.parametrize("s", [0.9 + 25j, 2 + 0j, 0.3 + 7j, -2.5 + 40j])
    def test_finite_difference(self, s):
        h = 1e-6
        fd = (zeta(s + h) - zeta(s - h)) / (2 * h) / zeta(s)
        assert abs(zeta_logderiv(s) - fd) < 1e-7 * max(1.0, abs(fd))

    def test_near_zero_and_pole(self):
        with pytest.raises(NearZeroError):
            zeta_logderiv(complex(0.5, 14.134725141734693))
        with pytest.raises(PoleError):
            zeta_logderiv(1)


@settings(max_examples=100, deadline=None)
@given(points(-4.5, 5.5, 900).filter(lambda z: abs(z.imag) > 1e-6))
def test_conjugate_symmetry(z):
    for f in (log_gamma, digamma, zeta):
        v, w = f(z), f(z.conjugate())
        assert abs(w - v.conjugate()) <= 1e-12 * max(1.0, abs(v))
