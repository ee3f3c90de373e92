import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bergnorm.diskquad import SampledField, build_rule, lp_norm
from bergnorm.errors import BudgetExceededError, DomainError
from bergnorm.projection import (
    SeriesCoeffs,
    SpaceParams,
    TestFunctionXi,
    apply_P_alpha,
    apply_P_sharp,
    boundary_rule,
    f_xi_norm,
    f_xi_values,
    project_f_xi_series,
)
from bergnorm.specfun import hyp2f1

EVAL = np.array([0.0, 0.3, -0.5j, 0.6 + 0.2j, 0.85 * np.exp(2.1j)])


@pytest.fixture(scope="module")
def rule_a0():
    return build_rule(48, 256, 0.0, 2)


@pytest.fixture(scope="module")
def rule_a1():
    return build_rule(48, 256, 1.0, 2)


class TestSpaceParams:
    @given(st.floats(1.01, 50), st.floats(-0.99, 5))
    def test_derived(self, p, alpha):
        prm = SpaceParams(p, alpha)
        assert 1 / prm.p + 1 / prm.q == pytest.approx(1.0, abs=1e-15)
        assert prm.beta > 0.5
        assert prm.dual().q == pytest.approx(p)

    @pytest.mark.parametrize("p, alpha", [(1.0, 0.0), (math.inf, 0.0), (2.0, -1.0)])
    def test_domain(self, p, alpha):
        with pytest.raises(DomainError):
            SpaceParams(p, alpha)


class TestApply:
    def test_constant(self, rule_a0):
        f = rule_a0.sample(lambda z: np.ones_like(z))
        np.testing.assert_allclose(apply_P_alpha(f, 0.0, EVAL), 1.0, atol=1e-12)
        assert apply_P_sharp(f, 0.0, [0.0])[0] == pytest.approx(1.0)

    @pytest.mark.parametrize("k", [1, 2, 5])
    def test_monomials_fixed(self, rule_a1, k):
        f = rule_a1.sample(lambda z: z**k)
        np.testing.assert_allclose(apply_P_alpha(f, 1.0, EVAL), EVAL**k, atol=1e-9)

    def test_conjugate_killed(self, rule_a0):
        f = rule_a0.sample(np.conj)
        np.testing.assert_allclose(apply_P_alpha(f, 0.0, EVAL), 0.0, atol=1e-9)

    def test_sharp_closed_form(self, rule_a0):
        f = rule_a0.sample(lambda z: np.ones_like(z))
        assert apply_P_sharp(f, 0.0, [0.5])[0].real == pytest.approx(1.1507283, abs=1e-7)
        assert apply_P_sharp(f, 0.0, [0.5j])[0].real == pytest.approx(hyp2f1(1, 1, 2, 0.25), abs=1e-10)

    @given(st.integers(0, 1000))
    def test_sharp_dominates(self, seed):
        rule = build_rule(16, 32, 0.0)
        f = SampledField(np.random.default_rng(seed).uniform(0, 1, rule.shape), rule)
        assert np.all(apply_P_sharp(f, 0.0, EVAL).real >= np.abs(apply_P_alpha(f, 0.0, EVAL)) - 1e-12)

    def test_alpha_mismatch(self, rule_a0):
        f = rule_a0.sample(lambda z: z)
        with pytest.raises(DomainError):
            apply_P_alpha(f, 1.0, [0.1])
        with pytest.raises(DomainError):
            apply_P_alpha(f, 0.0, [1.0])

    def _smooth_field(self, rule, seed):
        rng = np.random.default_rng(seed)
        c = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))

        def func(z):
            return sum(c[j, k] * z**j * np.conj(z) ** k for j in range(4) for k in range(4))

        return rule.sample(func)

    def _projected_series(self, f, alpha):
        # P f is a polynomial of degree < 4; read its coefficients off a circle
        # well inside the disk where the kernel quadrature is resolved
        n, rad = 16, 0.5
        ring = rad * np.exp(2j * np.pi * np.arange(n) / n)
        fourier = np.fft.fft(apply_P_alpha(f, alpha, ring)) / n
        return SeriesCoeffs(fourier[:8] / rad ** np.arange(8)), fourier

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_idempotent(self, rule_a0, seed):
        f = self._smooth_field(rule_a0, seed)
        pf, _ = self._projected_series(f, 0.0)
        ppf = apply_P_alpha(pf.on_rule(rule_a0), 0.0, EVAL)
        np.testing.assert_allclose(ppf, apply_P_alpha(f, 0.0, EVAL), atol=2e-9)

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_contraction_p2(self, rule_a0, seed):
        f = self._smooth_field(rule_a0, seed)
        pf, _ = self._projected_series(f, 0.0)
        assert pf.lp_norm_on(rule_a0, 2) <= lp_norm(f, 2) * (1 + 1e-9)

    def test_output_analytic(self, rule_a0):
        f = self._smooth_field(rule_a0, 3)
        n = 32
        ring = 0.7 * np.exp(2j * np.pi * np.arange(n) / n)
        fourier = np.fft.fft(apply_P_alpha(f, 0.0, ring)) / n
        # negative frequencies live in the upper half of the FFT
        assert np.max(np.abs(fourier[n // 2 + 1:])) <= 1e-9


class TestFXi:
    def test_zero(self):
        t = TestFunctionXi(0, SpaceParams(3, 0.5))
        np.testing.assert_allclose(f_xi_values(t, EVAL), 1.0)
        coeffs = project_f_xi_series(t)
        assert coeffs[0] == pytest.approx(1.0)
        assert np.all(coeffs.coeffs[1:] == 0)

    @given(st.floats(0, 0.95), st.floats(0, 6.3), st.floats(1.2, 8), st.floats(-0.9, 2))
    def test_modulus(self, r, th, p, alpha):
        prm = SpaceParams(p, alpha)
        t = TestFunctionXi(r * np.exp(1j * th), prm)
        vals = f_xi_values(t, EVAL)
        want = np.abs(1 - EVAL * np.conj(t.xi)) ** (-2 * prm.beta / p)
        np.testing.assert_allclose(np.abs(vals), want, rtol=1e-12)

    @pytest.mark.parametrize("xi, p, alpha", [(0.5, 4, 0), (0.7j, 3, 1), (-0.6, 2.5, -0.5)])
    def test_norm_against_quadrature(self, xi, p, alpha):
        t = TestFunctionXi(xi, SpaceParams(p, alpha))
        rule = build_rule(96, 128, alpha, 3)
        assert lp_norm(rule.sample(lambda z: f_xi_values(t, z)), p) == pytest.approx(f_xi_norm(t), abs=1e-8)

    def test_first_coefficient(self):
        t = TestFunctionXi(0.5, SpaceParams(4, 0))
        assert project_f_xi_series(t)[0] == pytest.approx(hyp2f1(-0.5, 1, 2, 0.25), rel=1e-14)

    @pytest.mark.parametrize("xi, p, alpha", [(0.5, 4, 0), (0.4 - 0.3j, 3, 1)])
    def test_series_matches_kernel_quadrature(self, xi, p, alpha):
        t = TestFunctionXi(xi, SpaceParams(p, alpha))
        rule = build_rule(96, 192, alpha, 3)
        f = rule.sample(lambda z: f_xi_values(t, z))
        pts = 0.9 * np.exp(1j * np.linspace(0, 2 * np.pi, 7))
        np.testing.assert_allclose(project_f_xi_series(t).evaluate(pts), apply_P_alpha(f, alpha, pts), atol=1e-6)

    def test_budget(self):
        t = TestFunctionXi(0.9, SpaceParams(4, 0))
        with pytest.raises(BudgetExceededError):
            project_f_xi_series(t, K=10, tol=1e-12)

    def test_xi_inside(self):
        with pytest.raises(DomainError):
            TestFunctionXi(1.0, SpaceParams(2, 0))

    def test_norm_blowup_logarithmic(self):
        prm = SpaceParams(4, 0)
        ratios = []
        for xa in (0.9, 0.99, 0.999):
            t = TestFunctionXi(xa, prm)
            ratios.append(f_xi_norm(t) ** 4 / math.log(1 / (1 - xa * xa)))
        assert max(ratios) / min(ratios) < 1.5
        assert abs(ratios[2] - ratios[1]) < abs(ratios[1] - ratios[0])


class TestSeriesCoeffs:
    def test_ring_values_match_horner(self):
        rng = np.random.default_rng(4)
        c = SeriesCoeffs(rng.normal(size=300) + 1j * rng.normal(size=300))
        rule = build_rule(8, 64, 0.0, 1)
        np.testing.assert_allclose(c.ring_values(rule), c.evaluate(rule.points), atol=1e-10)

    def test_lp_norm_on(self):
        c = SeriesCoeffs(np.array([0, 1.0]))
        rule = build_rule(16, 16, 0.0)
        assert c.lp_norm_on(rule, 2) == pytest.approx(math.sqrt(0.5))

    def test_boundary_rule_resolves_peak(self):
        xa = 0.999
        t = TestFunctionXi(xa, SpaceParams(4, 0))
        rule = boundary_rule(xa, 0.0)
        got = lp_norm(rule.sample(lambda z: f_xi_values(t, z)), 4)
        assert got == pytest.approx(f_xi_norm(t), rel=1e-9)
