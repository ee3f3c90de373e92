"""Acceptance suite: ten end-to-end criteria at their stated tolerances.

Each test records a one-line verdict in ``RESULTS``; the conftest hook
prints them after the run, and ``python tests/test_acceptance.py`` prints
them directly.
"""

import math
import time

import numpy as np
import pytest

from bergnorm.bounds import (
    EPS_SCHEDULE,
    XI_SCHEDULE,
    bilinear_form_quadrature,
    bilinear_form_value,
    case1_bound_check,
    case2_taylor_bound_check,
    conjectured_norm,
    decomposition_norm_check,
    dostanic_value,
    g_derivative_at_one,
    hausdorff_young_check,
    hv_inequality_check,
    loglog_slope,
    norm_monotonicity_check,
    polynomial_rule,
    rayleigh_quotient_f_xi,
    schur_constant_numeric,
    taylor_order,
    upper_bound_norm,
)
from bergnorm.identities import (
    beta_hyp_check,
    default_rule,
    double_integral_check,
    kernel_power_check,
    three_kernel_check,
)
from bergnorm.projection import SeriesCoeffs, SpaceParams

P = SpaceParams
RESULTS: dict[int, str] = {}


def record(n, name, ok, detail):
    RESULTS[n] = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {name}: {detail}"
    print(RESULTS[n])
    assert ok, RESULTS[n]


def _random_tuples(rng, n=50):
    beta_hyp, double, kernel, three = [], [], [], []
    while len(beta_hyp) < n:
        a, b = rng.uniform(-1, 2.5, 2)
        c, d = rng.uniform(0.2, 3, 2)
        if d + c - a - b > 0.2:
            beta_hyp.append((a, b, c, d))
    while len(double) < n:
        a, b = rng.uniform(0.1, 3, 2)
        c = rng.uniform(-1, 2.5)
        if 1 + a + b - 2 * c > 0.2:
            double.append((a, b, c))
    for _ in range(n):
        t = rng.uniform(-0.9, 2)
        z = rng.uniform(0, 0.8) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        kernel.append((z, rng.uniform(-1, 3), t))
    for _ in range(n):
        t = rng.uniform(-0.9, 2)
        z, w = rng.uniform(0, 0.8, 2) * np.exp(1j * rng.uniform(0, 2 * np.pi, 2))
        three.append((z, w, *rng.uniform(-1, 3, 3), t))
    return beta_hyp, double, kernel, three


def test_criterion_01_identity_suite():
    start = time.perf_counter()
    beta_hyp, double, kernel, three = _random_tuples(np.random.default_rng(2024))
    worst = {
        "beta_hyp": max(beta_hyp_check(*args).abs_diff for args in beta_hyp),
        "double_integral": max(double_integral_check(*args).abs_diff for args in double),
        "kernel_power": max(kernel_power_check(z, a, t, default_rule(t)).abs_diff for z, a, t in kernel),
        "three_kernel": max(three_kernel_check(*args, rule=default_rule(args[-1])).abs_diff for args in three),
    }
    elapsed = time.perf_counter() - start
    ok = (worst["beta_hyp"] <= 1e-9 and worst["double_integral"] <= 1e-9
          and worst["kernel_power"] <= 1e-7 and worst["three_kernel"] <= 1e-7 and elapsed < 60)
    detail = ", ".join(f"{k} {v:.1e}" for k, v in worst.items()) + f"; {elapsed:.1f} s"
    record(1, "identity suite", ok, detail)


def test_criterion_02_schur_constant():
    diffs = [schur_constant_numeric(P(p, a)).abs_diff for p in (2, 3, 4) for a in (-0.5, 0, 1)]
    pi_err = abs(upper_bound_norm(P(2, 0)) - math.pi)
    ok = max(diffs) <= 1e-5 and pi_err <= 1e-12
    record(2, "Schur constant", ok, f"max abs_diff {max(diffs):.1e}, |C(2,0) - pi| {pi_err:.1e}")


def test_criterion_03_bilinear_limit():
    ok, notes = True, []
    for p, a in ((2, 0), (3, 0), (2, 1)):
        prm = P(p, a)
        vals = [bilinear_form_value(e, prm) for e in EPS_SCHEDULE]
        upper = upper_bound_norm(prm)
        mono = all(v2 >= v1 for v1, v2 in zip(vals, vals[1:]))
        gap = (upper - vals[-1]) / upper
        quad = max(abs(bilinear_form_quadrature(e, prm).value - bilinear_form_value(e, prm)) for e in (1, 0.1))
        ok &= mono and gap <= 0.01 and quad <= 1e-4
        notes.append(f"({p},{a}) gap {gap:.1e} quad {quad:.1e}")
    record(3, "bilinear limit", ok, "; ".join(notes))


def test_criterion_04_rayleigh_lower_bound():
    prm = P(4, 0)
    start = time.perf_counter()
    quot = [rayleigh_quotient_f_xi(x, prm) for x in XI_SCHEDULE]
    elapsed = time.perf_counter() - start
    lower, upper, dost = conjectured_norm(prm), upper_bound_norm(prm), dostanic_value(4)
    final = quot[-1]
    checks = {
        "nondecreasing": all(q2 >= q1 for q1, q2 in zip(quot, quot[1:])),
        "below upper": max(quot) <= upper + 1e-6,
        "exceeds sqrt2": final > dost,
        "within 5% of pi/2": 0.95 * lower <= final <= lower,
        "under 5 min": elapsed < 300,
    }
    failed = [k for k, v in checks.items() if not v]
    detail = (f"quotients {', '.join(f'{q:.7f}' for q in quot)}; sqrt2 {dost:.7f}, "
              f"0.95 pi/2 {0.95 * lower:.7f}; {elapsed:.1f} s"
              + (f"; failing: {', '.join(failed)}" if failed else ""))
    record(4, "Rayleigh lower bound at (4, 0)", not failed, detail)


def test_criterion_05_decomposition():
    prm = P(4, 0)
    res = [decomposition_norm_check(x, prm) for x in XI_SCHEDULE]
    residual = max(r.residual for r in res)
    psi = [r.psi_norm for r in res]
    ups = [r.upsilon_norm for r in res]
    scaled = [r.f_norm / math.log(1 / (1 - x * x)) ** (1 / prm.p) for r, x in zip(res, XI_SCHEDULE)]
    spread = max(scaled) / min(scaled)
    ok = (residual <= 1e-6 and max(psi) / min(psi) < 2 and max(ups) / min(ups) < 2 and spread <= 1.2)
    detail = (f"residual {residual:.1e}, psi spread {max(psi) / min(psi):.3f}, "
              f"upsilon spread {max(ups) / min(ups):.3f}, f/log^(1/p) spread {spread:.3f}")
    record(5, "decomposition diagnostics", ok, detail)


def test_criterion_06_case_bounds():
    x1 = np.concatenate([np.arange(0, 1, 0.1), [0.99, 0.999]])
    viol = max(case1_bound_check(k, P(8, -0.9), x1) for k in (0, 1, 5))
    x2 = np.linspace(0, 0.99, 100)
    ratio = max(case2_taylor_bound_check(k, P(4, 0), x2).lhs_max_ratio for k in (0, 1, 5, 50))
    ks = np.arange(100, 1001, 10)
    slope_err = 0.0
    for prm in (P(4, 0), P(8, 2)):
        for j in range(1, taylor_order(prm) + 1):
            want = prm.beta - 2 * prm.beta / prm.q + j
            slope_err = max(slope_err, abs(loglog_slope(ks, g_derivative_at_one(prm, ks, j)) - want))
    ok = viol <= 1e-10 and ratio <= 1 and slope_err <= 0.1
    record(6, "coefficient bounds", ok, f"power-bound violation {viol:.2e}, Taylor-bound ratio {ratio:.3f}, slope error {slope_err:.1e}")


def test_criterion_07_hausdorff_young():
    rng = np.random.default_rng(7)
    worst, parseval = math.inf, 0.0
    for alpha in (0.0, 1.0):
        rule = polynomial_rule(alpha, 10)
        for p in (2, 3, 4):
            for _ in range(200):
                c = SeriesCoeffs(rng.normal(size=10) + 1j * rng.normal(size=10))
                res = hausdorff_young_check(c, P(p, alpha), rule)
                worst = min(worst, res.margin)
                if p == 2:
                    parseval = max(parseval, abs(res.margin))
    ok = worst >= -1e-8 and parseval <= 1e-8
    record(7, "Hausdorff-Young", ok, f"min margin {worst:.2e}, Parseval gap {parseval:.1e}")


def test_criterion_08_riesz_limit():
    ok, finals = True, []
    for p in (1.5, 2, 3, 4):
        gaps = [abs(conjectured_norm(P(p, -1 + d)) - dostanic_value(p)) for d in (1e-1, 1e-2, 1e-3)]
        # at p = 2 the gap is exactly zero; allow roundoff of a few ulps
        ok &= all(g2 <= g1 + 4 * np.finfo(float).eps for g1, g2 in zip(gaps, gaps[1:])) and gaps[-1] < 5e-3
        finals.append(f"p={p} {gaps[-1]:.1e}")
    record(8, "Riesz limit", ok, "final gaps " + ", ".join(finals))


def test_criterion_09_monotonicity():
    verdicts = {a: norm_monotonicity_check([2, 2.5, 3, 4, 8], a) for a in (-0.5, 0.0, 1.0)}
    record(9, "monotonicity in p", all(verdicts.values()),
           ", ".join(f"alpha={a}: {v}" for a, v in verdicts.items()))


def test_criterion_10_two_variable_inequality():
    p2 = [hv_inequality_check(2, 1, 2, 1_000_000, s).violations for s in (1, 2)]
    a = dostanic_value(1.5) ** 1.5
    bs = [hv_inequality_check(1.5, a, 0, 1_000_000, s).max_feasible_b for s in (1, 2)]
    stable = abs(bs[0] - bs[1]) <= 0.1 * min(bs)
    ok = sum(p2) == 0 and min(bs) > 0 and math.isfinite(max(bs)) and stable
    record(10, "two-variable inequality", ok,
           f"p=2 violations {p2}, p=1.5 max feasible b {bs[0]:.4f} / {bs[1]:.4f}")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
