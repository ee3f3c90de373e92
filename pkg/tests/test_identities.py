import math

import mpmath
import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from bergnorm.errors import DomainError, InconclusiveError
from bergnorm.identities import (
    ForelliRudinClass,
    beta_hyp_check,
    beta_hyp_closed_form,
    default_rule,
    double_integral_check,
    double_integral_closed_form,
    forelli_rudin_classify,
    kernel_power_check,
    kernel_power_closed_form,
    sup_value_check,
    three_kernel_check,
    three_kernel_series,
)
from bergnorm.specfun import gamma_ratio


class TestBetaHyp:
    def test_trivial_parameters(self):
        c, d = 1.7, 0.6
        res = beta_hyp_check(0, 0, c, d)
        assert res.closed_form == pytest.approx(gamma_ratio([c, d], [c + d]), rel=1e-14)
        assert res.abs_diff < 1e-12

    def test_four_over_pi(self):
        res = beta_hyp_check(0.5, 0.5, 1, 1)
        assert res.closed_form == pytest.approx(4 / math.pi, rel=1e-14)
        assert res.abs_diff < 1e-10

    @given(st.floats(-1, 2.5), st.floats(-1, 2.5), st.floats(0.2, 3), st.floats(0.2, 3))
    def test_random(self, a, b, c, d):
        assume(d + c - a - b > 0.2)
        assert beta_hyp_check(a, b, c, d).abs_diff <= 1e-10

    def test_against_mpmath_quadrature(self):
        a, b, c, d = 0.7, -0.4, 1.3, 0.8
        ref = mpmath.quad(lambda t: t ** (c - 1) * (1 - t) ** (d - 1) * mpmath.hyp2f1(a, b, c, t), [0, 0.5, 1])
        assert beta_hyp_closed_form(a, b, c, d) == pytest.approx(float(ref), rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            beta_hyp_check(2, 2, 1, 1)

    def test_large_delta_monotone(self):
        vals = [beta_hyp_closed_form(0.5, 0.5, 1.0, d) for d in (5, 10, 20, 40)]
        assert all(v2 < v1 for v1, v2 in zip(vals, vals[1:]))


class TestThreeKernel:
    def test_origin(self, rule0):
        value, tail = three_kernel_series(0, 0, 1.3, 0.4, 2.0, 0.5)
        assert value == pytest.approx(1 / 1.5)
        res = three_kernel_check(0, 0, 1.3, 0.4, 2.0, 0.0, rule=rule0)
        assert res.abs_diff < 1e-12

    def test_mean_value(self, rule0):
        res = three_kernel_check(0.6 - 0.2j, 0, 1, 1, 1, 0, rule=rule0)
        assert res.closed_form == pytest.approx(1.0)
        assert res.abs_diff < 1e-10

    def test_example(self, rule0):
        assert three_kernel_check(0.3, 0.5j, 1, 1, 1, 0, rule=rule0).abs_diff <= 1e-8

    @given(st.floats(-1, 3), st.floats(0, 0.8), st.floats(0, 2 * np.pi), st.sampled_from([-0.5, 0.0, 1.0]))
    def test_degenerates_to_kernel_power(self, a, r, th, t):
        z = r * np.exp(1j * th)
        value, _ = three_kernel_series(z, z, a, 0.0, a, t)
        assert value == pytest.approx(kernel_power_closed_form(z, a, t), rel=1e-10, abs=1e-10)

    @pytest.mark.parametrize("t", [-0.5, 0.0, 1.0])
    def test_random(self, t):
        rng = np.random.default_rng(11)
        rule = default_rule(t)
        for _ in range(4):
            a, b, c = rng.uniform(-1, 3, 3)
            z, w = rng.uniform(0, 0.8, 2) * np.exp(1j * rng.uniform(0, 2 * np.pi, 2))
            assert three_kernel_check(z, w, a, b, c, t, rule=rule).abs_diff <= 1e-8

    def test_resolution_convergence(self):
        args = (0.7j, 0.75, 2.2, 1.5, 2.6, 0.0)
        coarse = three_kernel_check(*args, rule=default_rule(0.0, 32, 64, 1)).abs_diff
        fine = three_kernel_check(*args, rule=default_rule(0.0, 128, 256, 3)).abs_diff
        assert fine < coarse


class TestKernelPower:
    def test_examples(self, rule0):
        assert kernel_power_closed_form(0, 2.3, 0.5) == pytest.approx(1 / 1.5)
        assert kernel_power_closed_form(0.5, 1, 0) == pytest.approx(-math.log(0.75) / 0.25, rel=1e-14)
        assert kernel_power_closed_form(0.5, 1, 0) == pytest.approx(1.1507283, abs=1e-7)
        assert kernel_power_check(0.5j, 1, 0, rule0).abs_diff < 1e-12

    @given(st.floats(0, 0.8), st.floats(-1, 3), st.sampled_from([-0.5, 0.0, 1.0]))
    def test_random(self, r, a, t):
        assert kernel_power_check(r * np.exp(0.7j), a, t, default_rule(t)).abs_diff <= 1e-8


class TestForelliRudin:
    @pytest.mark.parametrize("c, want", [(-1, ForelliRudinClass.BOUNDED), (0, ForelliRudinClass.LOGARITHMIC),
                                         (1, ForelliRudinClass.POWER)])
    def test_examples(self, c, want):
        assert forelli_rudin_classify(0, c) is want

    @given(st.floats(-0.9, 3), st.floats(1, 3))
    def test_power_region(self, t, c):
        assert forelli_rudin_classify(t, c) is ForelliRudinClass.POWER

    @given(st.floats(-0.9, 3), st.floats(0.5, 3), st.sampled_from([-1, 1]))
    def test_never_misclassifies(self, t, mag, sign):
        # slow transients may be inconclusive at the default radii, never wrong;
        # for |c| << 1 a power and a logarithm are indistinguishable at finite radii
        c = sign * mag
        want = {-1: ForelliRudinClass.BOUNDED, 0: ForelliRudinClass.LOGARITHMIC, 1: ForelliRudinClass.POWER}
        try:
            got = forelli_rudin_classify(t, c)
        except InconclusiveError:
            return
        assert got is want[int(np.sign(c))]

    def test_inconclusive_when_radii_coarse(self):
        with pytest.raises(InconclusiveError):
            forelli_rudin_classify(0, -0.01, radii=(0.5, 0.6, 0.7))


class TestSupValue:
    def test_example(self):
        res = sup_value_check(2, 0)
        assert res.closed_form == pytest.approx(1.0)
        assert res.abs_diff <= 1e-4
        assert res.argmax_at_edge and res.monotone

    @given(st.floats(-0.5, 2), st.floats(0.3, 2))
    def test_argmax_at_edge(self, t, extra):
        a = 1 + t / 2 + extra
        res = sup_value_check(a, t)
        assert res.monotone and res.argmax_at_edge
        assert res.abs_diff <= 1e-3 * res.closed_form

    def test_domain(self):
        with pytest.raises(DomainError):
            sup_value_check(1.0, 0.0)


class TestDoubleIntegral:
    def test_examples(self):
        assert double_integral_closed_form(1, 1, 0) == pytest.approx(0.5)
        assert double_integral_check(1, 1, 0).abs_diff < 1e-12
        assert double_integral_closed_form(1, 1, 1) == pytest.approx(1.0)
        assert double_integral_check(1, 1, 1).abs_diff < 1e-12

    @given(st.floats(0.1, 3), st.floats(0.1, 3), st.floats(-1, 2.5))
    def test_random(self, a, b, c):
        assume(1 + a + b - 2 * c > 0.2)
        assert double_integral_check(a, b, c).abs_diff <= 1e-9

    def test_domain(self):
        with pytest.raises(DomainError):
            double_integral_check(1, 1, 2)
