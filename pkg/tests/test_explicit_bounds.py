import math

import numpy as np
import pytest

from xipos.errors import DomainError
from xipos.explicit_bounds import (
    SUM_BOUND_CONSTANT_ALT,
    LOWER_THRESHOLD,
    BoundReport,
    bound_A,
    bound_B,
    eps1,
    eps2,
    lemma3_F,
    lemma3_F_derivative,
    lemma4_arctan_envelope,
    lemma4_margins,
    lemma5_envelopes,
    lemma6_envelopes,
    lemma8_error_bounds,
    theorem1_bounds,
    verify_lemma5,
    verify_lemma6,
    verify_lemma8,
    verify_theorem1_upper,
    verify_thresholds,
)
from xipos.kernels import GAMMA1, KernelParams
from xipos.quadrature_oracle import kernel_integral
from xipos.xi_core import sigma1_real_part

# mpmath at 40 digits, term by term
EPS1_100 = -0.01915316018195429044248708450762820079568
EPS2_14635 = 0.05748442000467094983911520245561668619482
F_23 = 0.000927539633765199308571641859519
F_1000 = 0.126474790961105583710249173996


def test_bound_report_strict():
    assert not BoundReport("x", {}, 1.0, 1.0).satisfied
    r = BoundReport("x", {"t": 2.0}, 1.0, 3.0)
    assert r.satisfied and r.margin == 2.0
    assert r.as_dict()["margin"] == 2.0


class TestPositivityBoundFormulas:
    def test_eps1(self):
        assert eps1(100.0) == pytest.approx(EPS1_100, rel=1e-13)
        assert abs(eps1(LOWER_THRESHOLD)) <= 1.65e-113

    def test_eps1_decays(self):
        for t in (1e3, 1e4, 1e6, 1e10):
            assert abs(eps1(10 * t)) < abs(eps1(t))

    def test_eps2(self):
        assert eps2(14.635) == pytest.approx(EPS2_14635, rel=1e-13)
        assert eps2(100.0) > 0
        assert eps2(1e6) < 1e-4

    def test_A(self):
        assert bound_A(LOWER_THRESHOLD) >= 49e-6
        assert bound_A(1e3) < 0
        assert bound_A(1e100) < 0

    def test_B_positive_increasing(self):
        ts = np.geomspace(14.635, 1e6, 400)
        vals = [bound_B(float(t)) for t in ts]
        assert vals[0] > 0
        assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_theorem1_bounds(self):
        lo, _ = theorem1_bounds(0.75, LOWER_THRESHOLD)
        assert lo > 0
        lo, hi = theorem1_bounds(0.5 + 1e-12, 100.0)
        assert abs(lo) < 1e-10 and hi > 1e12
        lo_c, hi_c = theorem1_bounds(0.75, 100.0, c=0.5)
        assert hi_c == pytest.approx(0.5 * theorem1_bounds(0.75, 100.0)[1])

    @pytest.mark.parametrize("args", [(0.5, 100.0), (1.0, 100.0), (0.75, 100.0, 0.0), (0.75, 100.0, 1.5)])
    def test_domain(self, args):
        with pytest.raises(DomainError):
            theorem1_bounds(*args)

    def test_eps_domains(self):
        with pytest.raises(DomainError):
            eps1(GAMMA1)
        with pytest.raises(DomainError):
            eps2(0.0)


class TestKernelPositivityF:
    def test_pinpoint(self):
        assert lemma3_F(23.0) == pytest.approx(F_23, abs=1e-12)
        assert abs(lemma3_F(23.0) - 0.00092) <= 5e-5

    def test_limit_at_alpha(self):
        assert lemma3_F(GAMMA1 + 1e-9) == pytest.approx(0.135, abs=1e-6)

    def test_t_1000(self):
        assert lemma3_F(1000.0) == pytest.approx(F_1000, rel=1e-9)

    def test_positive_log_spaced(self):
        for t in np.geomspace(GAMMA1 + 1e-6, 1e4, 200):
            assert lemma3_F(float(t)) > 0

    def test_nondecreasing_after_23(self):
        h = 1e-3
        for t in np.geomspace(23.5, 1e4, 40):
            t = float(t)
            assert (lemma3_F(t + h) - lemma3_F(t - h)) / (2 * h) >= -1e-8

    @pytest.mark.parametrize("t", [16.0, 23.0, 80.0, 900.0])
    def test_derivative_closed_form(self, t):
        h = 1e-4
        fd = (lemma3_F(t + h) - lemma3_F(t - h)) / (2 * h)
        assert lemma3_F_derivative(t) == pytest.approx(fd, abs=1e-8)

    def test_domain(self):
        with pytest.raises(DomainError):
            lemma3_F(10.0)


class TestArctanEnvelope:
    def test_examples(self):
        lo, hi = lemma4_arctan_envelope(2.0)
        assert lo < math.atan(2.0) < hi
        lo, hi = lemma4_arctan_envelope(10.0)
        assert lo == pytest.approx(math.pi / 2 - 0.1) and hi == pytest.approx(math.pi / 2 - 0.05)

    def test_boundary(self):
        lo, hi = lemma4_arctan_envelope(1 + 1e-9)
        assert lo < math.atan(1 + 1e-9) < hi

    def test_1000_samples(self):
        for t in np.geomspace(1 + 1e-9, 1e6, 1000):
            gap_lo, gap_hi = lemma4_margins(float(t))
            assert gap_lo > 0 and gap_hi > 0

    def test_margins_match_direct_where_resolvable(self):
        for t in (1.5, 3.0, 20.0):
            lo, hi = lemma4_arctan_envelope(t)
            gl, gh = lemma4_margins(t)
            assert gl == pytest.approx(math.atan(t) - lo, rel=1e-12)
            assert gh == pytest.approx(hi - math.atan(t), rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            lemma4_arctan_envelope(1.0)


ADMISSIBLE = [
    KernelParams(a, b, alpha, t)
    for a, b in ((0.5, 1.0), (0.5, 2.0), (1.0, 2.0), (0.25, 1.0))
    for alpha in (GAMMA1, 20.0)
    for t in (30.0, 100.0, 1000.0, 1e4)
]


class TestKernelEnvelopes:
    @pytest.mark.parametrize("params", ADMISSIBLE[::2])
    def test_minus_envelope(self, params):
        reports = verify_lemma5(params)
        assert all(r.satisfied for r in reports)

    @pytest.mark.parametrize("params", ADMISSIBLE[::2])
    def test_plus_envelope(self, params):
        assert all(r.satisfied for r in verify_lemma6(params))

    def test_examples(self):
        p = KernelParams(0.5, 1.0, GAMMA1, 100.0)
        lo, hi = lemma5_envelopes(p)
        assert lo < kernel_integral(p, "minus").value < hi
        lo, hi = lemma6_envelopes(p)
        assert lo < kernel_integral(p, "plus").value < hi

    def test_tilde_d_decays(self):
        for t in (100.0, 1e3, 1e4):
            p = KernelParams(0.5, 1.0, GAMMA1, t)
            assert lemma6_envelopes(p.at(10 * t))[1] < lemma6_envelopes(p)[1]

    def test_preconditions(self):
        with pytest.raises(DomainError):
            lemma5_envelopes(KernelParams(1.0, 0.5, GAMMA1, 100.0))
        with pytest.raises(DomainError):
            lemma5_envelopes(KernelParams(0.5, 1.0, GAMMA1, GAMMA1 + 0.1))


class TestSumIntegralContainment:
    @pytest.mark.parametrize("a, b", [(0.5, 1.0), (1.0, 2.0)])
    @pytest.mark.parametrize("t", [50.0, 100.0, 500.0])
    def test_containment(self, table1000, a, b, t):
        for r in verify_lemma8(table1000, a, b, t):
            assert r.satisfied, r

    def test_proof_constant_also_holds(self, table1000):
        assert all(r.satisfied for r in verify_lemma8(table1000, 0.5, 1.0, 100.0, SUM_BOUND_CONSTANT_ALT))

    def test_bounds_positive(self):
        for t in (15.0, 100.0, 1e6):
            e1, e2 = lemma8_error_bounds(0.5, 1.0, t)
            assert e1 > 0 and e2 > 0


class TestCriticalLineUpperBound:
    @pytest.mark.parametrize("sigma, t", [(0.75, 100.0), (0.51, 1000.0), (0.99, 20.0)])
    def test_examples(self, table1000, sigma, t):
        assert verify_theorem1_upper(sigma, t, table1000).satisfied

    def test_upper_exceeds_sigma1(self, table100):
        value, _ = sigma1_real_part(0.75 + 100j, table100)
        assert theorem1_bounds(0.75, 100.0)[1] > value

    def test_grid(self, table1000):
        for sigma in (0.55, 0.6, 0.75, 0.9, 0.99):
            for t in (20.0, 50.0, 100.0, 500.0, 1000.0):
                assert verify_theorem1_upper(sigma, t, table1000).satisfied


def test_thresholds():
    reports = verify_thresholds()
    assert len(reports) == 4
    assert all(r.satisfied for r in reports)
