"""Two-sided estimates for the norm of P_alpha on L^p_alpha.

Closed-form bounds come first, then the numerical evidence behind them: the
Schur-test constant, a bilinear pairing that saturates the maximal
projection, Rayleigh quotients of the test family ``f_xi``, and the
decomposition of ``P_alpha f_xi`` into a dominant term plus two bounded
remainders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .diskquad import (
    QuadRule,
    _jacobi_tail_panel,
    _legendre_panel,
    build_rule,
    graded_angles,
    radial_nodes,
)
from .errors import CutoffError, DomainError, ResolutionError
from .projection import (
    SeriesCoeffs,
    SpaceParams,
    TestFunctionXi,
    boundary_rule,
    default_truncation,
    f_xi_norm,
    f_xi_series_parts,
    project_f_xi_series,
    series_tail,
)
from .specfun import gamma_ratio, hyp2f1, ln_gamma

XI_SCHEDULE = (0.9, 0.99, 0.999)
EPS_SCHEDULE = (1.0, 0.1, 0.01, 1e-3, 1e-4)


# ---------------------------------------------------------------------------
# closed forms

def conjectured_norm(params: SpaceParams) -> float:
    """``Gamma((2+a)/p) Gamma((2+a)/q) / Gamma((2+a)/2)^2``, the lower bound."""
    s = 2.0 + params.alpha
    return gamma_ratio([s / params.p, s / params.q], [s / 2, s / 2])


def upper_bound_norm(params: SpaceParams) -> float:
    """``(1+a) Gamma((1+a)/p) Gamma((1+a)/q) / Gamma((2+a)/2)^2``, the norm of P_alpha#."""
    a1 = 1.0 + params.alpha
    return a1 * gamma_ratio([a1 / params.p, a1 / params.q], [params.beta, params.beta])


def dostanic_value(p: float) -> float:
    """``csc(pi/p)``, the norm of the Riesz projection on the circle."""
    if not 1 < p < math.inf:
        raise DomainError(f"p must lie in (1, inf), got {p}")
    return 1.0 / math.sin(math.pi / p)


# ---------------------------------------------------------------------------
# Schur test

class SchurResult(NamedTuple):
    numeric_sup: float
    closed_form: float
    abs_diff: float


def schur_profile(params: SpaceParams, one_minus_x) -> np.ndarray:
    """``(1-x)^((1+a)/p) (1+a) int (1-|w|^2)^t |1 - z conj w|^-(2+a) dA(w)`` at ``|z|^2 = x``.

    ``t = alpha - (1+alpha)/p``; the inner integral is the hypergeometric
    closed form for radial kernel powers.
    """
    a1 = 1.0 + params.alpha
    t = params.alpha - a1 / params.p
    omx = np.asarray(one_minus_x, dtype=float)
    e = a1 / params.p
    vals = [om ** e * a1 * hyp2f1(params.beta, params.beta, 2 + t, 1 - om, lam_c=om) / (1 + t)
            for om in omx.ravel()]
    return np.array(vals).reshape(omx.shape)


def schur_constant_numeric(params: SpaceParams, depth: int = 100,
                           per_decade: int = 2) -> SchurResult:
    """Sup of the Schur profile on a grid ``1 - |z|^2 = 10^-j``, ``j <= depth``.

    The profile approaches its sup at rate ``(1-x)^((1+alpha)/p)``, which is
    why the grid runs far past anything representable as ``|z|`` itself.
    """
    omx = np.concatenate([np.linspace(1.0, 0.1, 9, endpoint=False),
                          np.logspace(-1, -depth, per_decade * (depth - 1) + 1)])
    vals = schur_profile(params, omx)
    sup = float(vals.max())
    closed = upper_bound_norm(params)
    return SchurResult(sup, closed, abs(sup - closed))


# ---------------------------------------------------------------------------
# bilinear pairing <P# g_eps, h_eps>

def _bilinear_exponents(epsilon: float, params: SpaceParams):
    a1 = 1.0 + params.alpha
    p, q = params.p, params.q
    a = a1 * (1 + (epsilon - 1) / q)
    b = a1 * (1 + (epsilon - 1) / p)
    log_norm = (ln_gamma(2 + params.alpha + epsilon * a1 * q) - math.log(a1)
                - ln_gamma(epsilon * a1) - ln_gamma(2 + params.alpha + epsilon * a1 * q / p))
    return a, b, math.exp(log_norm / q)


def bilinear_form_value(epsilon: float, params: SpaceParams) -> float:
    """Closed form of ``<P# g_eps, h_eps>`` for the unit-norm pair g_eps, h_eps."""
    if not epsilon > 0:
        raise DomainError("epsilon must be positive")
    a1 = 1.0 + params.alpha
    p, q = params.p, params.q
    gam = gamma_ratio([a1 / p + epsilon * a1 / q, a1 / q + epsilon * a1 / p, epsilon * a1],
                      [params.beta + epsilon * a1, params.beta + epsilon * a1])
    _, _, h_const = _bilinear_exponents(epsilon, params)
    return a1 * a1 * gam * epsilon ** (1 / p) * h_const


class BilinearQuad(NamedTuple):
    value: float
    g_norm: float
    h_norm: float


def _angular_mean(one_minus_rho, rho, power, theta, weights):
    """Mean over the circle of ``|1 - rho e^{i theta}|^-power``, vectorised over rho."""
    base = (one_minus_rho[:, None] ** 2
            + 4 * rho[:, None] * np.sin(theta[None, :] / 2) ** 2)
    return base ** (-power / 2) @ weights


def _two_sided_nodes(n: int, expo: float, depth: int, origin_depth: int = 8):
    """Nodes ``(s, 1-s)`` and weights for ``(1-s)^expo ds`` graded toward both ends.

    Panels shrink geometrically toward ``s = 1`` (Jacobi weight on the last
    one) and toward ``s = 0``, where factors like ``s^b`` with small ``b``
    are not smooth.
    """
    ys, ws = [], []
    for j in range(1, depth):
        y, w = _legendre_panel(n, expo, 10.0 ** -(j + 1), 10.0 ** -j)
        ys.append(y)
        ws.append(w)
    y, w = _jacobi_tail_panel(n, expo, 10.0 ** -depth)
    ys.append(y)
    ws.append(w)
    # s in [0, 0.9], graded toward s = 0
    cuts = 0.9 * 10.0 ** -np.arange(origin_depth + 1)
    x, wl = np.polynomial.legendre.leggauss(n)
    for hi, lo in zip(cuts[:-1], np.append(cuts[1:-1], 0.0)):
        half = 0.5 * (hi - lo)
        sv = lo + half * (1 + x)
        ys.append(1 - sv)
        ws.append(wl * half * (1 - sv) ** expo)
    y, w = np.concatenate(ys), np.concatenate(ws)
    order = np.argsort(-y)
    y, w = y[order], w[order]
    return 1 - y, y, w


def bilinear_form_quadrature(epsilon: float, params: SpaceParams, per_panel: int = 16,
                             depth: int | None = None, max_depth: int = 40) -> BilinearQuad:
    """``<P# g_eps, h_eps>`` with both disk integrals done numerically.

    Both functions are radial. The inner integral runs over graded radial
    panels and a graded angular rule, since its kernel peaks at width
    ``1 - |z|^2``; the outer one puts ``(1-|z|^2)^(eps(1+alpha)-1)`` into a
    Gauss-Jacobi weight. The norms of g and h are computed on the same outer
    rule and must come out as 1.

    The outer integrand behaves like ``y^(a-1) (C + O(y^c))`` in
    ``y = 1 - |z|^2``; grading stops at ``y = 10^-depth`` and the part of the
    integral not captured there is of order ``10^(-depth a)``. The default
    depth makes that ``1e-7``; if ``max_depth`` cannot reach ``1e-5``
    (``a`` tiny, i.e. small ``eps`` with alpha near -1) a
    :class:`ResolutionError` is raised.
    """
    if not 0 < epsilon <= 1:
        raise DomainError("epsilon must lie in (0, 1]")
    a1 = 1.0 + params.alpha
    p, q = params.p, params.q
    a, b, h_const = _bilinear_exponents(epsilon, params)
    if depth is None:
        depth = min(max(16, math.ceil(7 / a)), max_depth)
    if 10.0 ** (-depth * a) > 1e-5:
        raise ResolutionError(
            f"boundary layer too thick: grading to 1e-{depth} leaves ~{10.0 ** (-depth * a):.1g}"
        )
    e_out = epsilon * a1 - 1.0
    c_exp = a - 1.0 - e_out

    s_o, y_o, w_o = _two_sided_nodes(per_panel, e_out, depth)
    depth_in = depth + 6
    s_i, y_i, w_i = radial_nodes(per_panel * (depth_in + 1), b - 1.0, depth_in)
    w_i = w_i / b  # weights for (1-s)^(b-1) ds
    theta, w_t = graded_angles(smallest=10.0 ** -(depth_in + 3))

    pg = np.empty(s_o.size)
    for i, (sz, yz) in enumerate(zip(s_o, y_o)):
        omr2 = yz + sz * y_i  # 1 - |z|^2 |w|^2 without cancellation
        rho = np.sqrt(sz * s_i)
        mean = _angular_mean(omr2 / (1 + rho), rho, 2.0 + params.alpha, theta, w_t)
        pg[i] = a1 * epsilon ** (1 / p) * np.dot(w_i, mean)

    value = a1 * h_const * np.dot(w_o, s_o ** b * y_o ** c_exp * pg)
    g_norm = (epsilon * a1 * w_o.sum()) ** (1 / p)
    h_norm = (h_const ** q * a1 * np.dot(w_o, s_o ** (b * q))) ** (1 / q)
    if abs(g_norm - 1) > 1e-3 or abs(h_norm - 1) > 1e-3:
        raise ResolutionError(f"test-pair norms {g_norm:.6g}, {h_norm:.6g} are off; refine the rule")
    return BilinearQuad(float(value), float(g_norm), float(h_norm))


# ---------------------------------------------------------------------------
# Rayleigh quotients of f_xi

def rayleigh_quotient_f_xi(xi: complex, params: SpaceParams, K: int | None = None,
                           rule: QuadRule | None = None, tol: float = 1e-12) -> float:
    """``||P_alpha f_xi|| / ||f_xi||`` with the numerator from the Taylor series."""
    t = TestFunctionXi(complex(xi), params)
    coeffs = project_f_xi_series(t, K, tol)
    rule = rule or boundary_rule(abs(t.xi), params.alpha)
    return coeffs.lp_norm_on(rule, params.p) / f_xi_norm(t)


def rayleigh_sweep(xi_list, params: SpaceParams, K: int | None = None) -> list[tuple[float, float]]:
    return [(float(abs(x)), rayleigh_quotient_f_xi(x, params, K)) for x in xi_list]


# ---------------------------------------------------------------------------
# decomposition of P_alpha f_xi

def is_cutoff(params: SpaceParams) -> bool:
    return math.isclose(params.beta, params.q / 2, rel_tol=0, abs_tol=1e-12)


def _check_cutoff(params: SpaceParams):
    if is_cutoff(params):
        raise CutoffError(
            f"beta = q/2 at (p, alpha) = ({params.p}, {params.alpha}); "
            "perturb p slightly, the bound is continuous there"
        )


def epsilon_coeffs(params: SpaceParams, K: int) -> np.ndarray:
    """``eps_k = (2b/p)_k/k! {Gamma(k+2b)Gamma(k+b)/(Gamma(k+b+2b/q)Gamma(k+2b/p)) - 1}``.

    The Gamma quotient ``R_k`` tends to 1, so it is carried in logs: its
    step ratio is ``1 + D/((k+b+2b/q)(k+2b/p))`` with
    ``D = 2b^2 - (b+2b/q)(2b/p)``, and ``R_k - 1`` comes out of expm1.
    """
    beta, p, q = params.beta, params.p, params.q
    u, v = 2 * beta / p, 2 * beta / q
    k = np.arange(K, dtype=float)
    d = 2 * beta * beta - (beta + v) * u
    log_r0 = ln_gamma(2 * beta) + ln_gamma(beta) - ln_gamma(beta + v) - ln_gamma(u)
    steps = np.log1p(d / ((k[:-1] + beta + v) * (k[:-1] + u)))
    log_r = log_r0 + np.concatenate([[0.0], np.cumsum(steps)])
    lead = np.ones(K)
    if K > 1:
        lead[1:] = np.cumprod((u + k[:-1]) / (k[:-1] + 1))
    return lead * np.expm1(log_r)


def g_at_one(params: SpaceParams, K: int) -> np.ndarray:
    """``g_k(1-) = Gamma(2b/q) Gamma(2b+k) / (Gamma(b) Gamma(b+2b/q+k))`` for k < K."""
    beta, v = params.beta, 2 * params.beta / params.q
    k = np.arange(K, dtype=float)
    out = np.empty(K)
    out[0] = gamma_ratio([v, 2 * beta], [beta, beta + v])
    if K > 1:
        out[1:] = out[0] * np.cumprod((2 * beta + k[:-1]) / (beta + v + k[:-1]))
    return out


def g_k(params: SpaceParams, k: int, x: float) -> float:
    """``g_k(x) = 2F1(b - 2b/q, b + k; 2b + k; x)``."""
    beta = params.beta
    return hyp2f1(beta - 2 * beta / params.q, beta + k, 2 * beta + k, x)


def c1_constant(params: SpaceParams, k) -> np.ndarray:
    """``C1(k, b) = (1-q/2) Gamma(1-2b/q)/Gamma(1-2b/q+b) Gamma(2b+k)/Gamma(b+k)`` for 1/2 < b < q/2."""
    beta, q = params.beta, params.q
    v = 2 * beta / q
    pre = (1 - q / 2) * gamma_ratio([1 - v], [1 - v + beta])
    ks = np.atleast_1d(np.asarray(k, dtype=float))
    return pre * np.array([gamma_ratio([2 * beta + kk], [beta + kk]) for kk in ks])


def taylor_order(params: SpaceParams) -> int:
    """``m = ceil(2b/q - b)``, the Taylor order used when b > q/2."""
    return int(math.ceil(2 * params.beta / params.q - params.beta))


@dataclass(frozen=True)
class DecompositionCoeffs:
    epsilon_k: SeriesCoeffs
    a_k_xi: SeriesCoeffs
    g_k_at_one: np.ndarray
    C1: np.ndarray | None
    m: int | None
    lead_constant: float


def decomposition_coeffs(xi: complex, params: SpaceParams, K: int | None = None,
                         tol: float = 1e-12) -> DecompositionCoeffs:
    """Coefficients of the split ``P f_xi = Phi + Psi + Upsilon``.

    ``epsilon_k`` and ``a_k_xi`` hold the raw sequences ``eps_k`` and
    ``a_k(xi)``; the Taylor coefficients of Psi and Upsilon are these times
    ``lead_constant`` (Psi only) and ``conj(xi)^k``.
    """
    _check_cutoff(params)
    t = TestFunctionXi(complex(xi), params)
    xa = abs(t.xi)
    K = default_truncation(xa, tol) if K is None else int(K)
    if K < 1:
        raise DomainError("K must be positive")
    beta, q = params.beta, params.q
    poch, hyp, powers = f_xi_series_parts(t, K)
    g1 = g_at_one(params, K)
    eps = epsilon_coeffs(params, K)
    a_k = poch * (hyp - g1)
    lead = gamma_ratio([2 * beta / params.p, 2 * beta / q], [beta, beta])
    c1 = c1_constant(params, np.arange(K)) if 0.5 < beta < q / 2 else None
    m = taylor_order(params) if beta > q / 2 else None
    return DecompositionCoeffs(
        SeriesCoeffs(eps, series_tail(eps * powers, xa, 0.0)),
        SeriesCoeffs(a_k, series_tail(a_k * powers, xa, beta)),
        g1, c1, m, lead,
    )


class DecompositionNorms(NamedTuple):
    phi_norm: float
    psi_norm: float
    upsilon_norm: float
    f_norm: float
    residual: float
    pf_norm: float


def decomposition_norm_check(xi: complex, params: SpaceParams, K: int | None = None,
                             rule: QuadRule | None = None) -> DecompositionNorms:
    """L^p norms of the three pieces of ``P f_xi`` and of the reassembly residual."""
    dec = decomposition_coeffs(xi, params, K)
    t = TestFunctionXi(complex(xi), params)
    K = dec.epsilon_k.truncation
    rule = rule or boundary_rule(abs(t.xi), params.alpha)
    p = params.p
    pf = project_f_xi_series(t, K, tol=np.inf)
    _, _, powers = f_xi_series_parts(t, K)
    psi = SeriesCoeffs(dec.lead_constant * dec.epsilon_k.coeffs * powers)
    ups = SeriesCoeffs(dec.a_k_xi.coeffs * powers)
    rest = SeriesCoeffs(pf.coeffs - psi.coeffs - ups.coeffs)
    xi_c = complex(t.xi)
    expo = -2 * params.beta / p

    # Phi is sampled in closed form ring by ring; the residual compares it with
    # the series P f - Psi - Upsilon on the same rings
    phi_acc = res_acc = 0.0
    per_ring = max(1, (1 << 22) // max(rule.angular_count, K))
    e_theta = np.exp(1j * rule.theta)
    for start in range(0, rule.s.size, per_ring):
        rows = np.arange(start, min(start + per_ring, rule.s.size))
        z = rule.r[rows, None] * e_theta[None, :]
        phi = dec.lead_constant * (1 - z * xi_c.conjugate()) ** expo
        approx = rest.ring_values(rule, rows)
        w = rule.radial_weights[rows]
        phi_acc += np.dot(w, (np.abs(phi) ** p).mean(axis=1))
        res_acc += np.dot(w, (np.abs(approx - phi) ** p).mean(axis=1))
    return DecompositionNorms(
        phi_norm=float(phi_acc) ** (1 / p),
        psi_norm=psi.lp_norm_on(rule, p),
        upsilon_norm=ups.lp_norm_on(rule, p),
        f_norm=f_xi_norm(t),
        residual=float(res_acc) ** (1 / p),
        pf_norm=pf.lp_norm_on(rule, p),
    )


# ---------------------------------------------------------------------------
# bounds on g_k(x) - g_k(1-) below (1/2 < beta < q/2) and above (beta > q/2) the cut-off

def case1_bound_check(k: int, params: SpaceParams, x_grid) -> float:
    """``max_x |g_k(x) - g_k(1-)| - C1(k,b) (1-x)^(2b/q)``; nonpositive when the bound holds."""
    beta, q = params.beta, params.q
    if not 0.5 < beta < q / 2:
        raise DomainError(f"the power bound needs 1/2 < beta < q/2, got beta={beta}, q/2={q / 2}")
    g1 = g_at_one(params, k + 1)[k]
    c1 = c1_constant(params, k)[0]
    x = np.asarray(x_grid, dtype=float)
    gaps = np.array([abs(g_k(params, k, xx) - g1) for xx in x])
    return float(np.max(gaps - c1 * (1 - x) ** (2 * beta / q)))


def case1_ratio_profile(k: int, params: SpaceParams, x_grid) -> np.ndarray:
    """``(g_k(x) - g_k(1-)) / (1-x)^(2b/q)`` on the grid."""
    beta, q = params.beta, params.q
    g1 = g_at_one(params, k + 1)[k]
    x = np.asarray(x_grid, dtype=float)
    return np.array([(g_k(params, k, xx) - g1) / (1 - xx) ** (2 * beta / q) for xx in x])


def g_derivative_at_one(params: SpaceParams, k, j: int) -> np.ndarray:
    """``|g_k^(j)(1-)|`` from the Gamma product, for ``1 <= j < 2b/q - b + 1``."""
    beta, q = params.beta, params.q
    v = 2 * beta / q
    if not j < v:
        raise DomainError(f"the {j}-th derivative of g_k is infinite at 1 (needs j < 2b/q)")
    ks = np.atleast_1d(np.asarray(k, dtype=float))
    poch = abs(math.prod(beta - v + i for i in range(j)))
    return np.array([poch * gamma_ratio([v - j, beta + j + kk, 2 * beta + kk],
                                        [beta, beta + kk, beta + v + kk]) for kk in ks])


class Case2Result(NamedTuple):
    lhs_max_ratio: float
    m: int


def case2_taylor_bound_check(k: int, params: SpaceParams, x_grid) -> Case2Result:
    """Largest ratio ``|g_k(x) - g_k(1-)| / sum_{j<=m} |g_k^(j)(1-)| (1-x)^j / j!``."""
    beta, q = params.beta, params.q
    if not beta > q / 2:
        raise DomainError(f"the Taylor bound needs beta > q/2, got beta={beta}, q/2={q / 2}")
    m = taylor_order(params)
    g1 = g_at_one(params, k + 1)[k]
    derivs = [g_derivative_at_one(params, k, j)[0] / math.factorial(j) for j in range(1, m + 1)]
    x = np.asarray(x_grid, dtype=float)
    lhs = np.array([abs(g_k(params, k, xx) - g1) for xx in x])
    rhs = sum(d * (1 - x) ** j for j, d in enumerate(derivs, start=1))
    return Case2Result(float(np.max(lhs / rhs)), m)


def g_derivative_sup_at_edge(k: int, params: SpaceParams, x_grid) -> bool:
    """Whether ``|g_k^(m)|`` on the grid peaks at its largest point."""
    beta, q = params.beta, params.q
    m = taylor_order(params)
    a0 = beta - 2 * beta / q
    x = np.sort(np.asarray(x_grid, dtype=float))
    vals = np.abs([hyp2f1(a0 + m, beta + k + m, 2 * beta + k + m, xx) for xx in x])
    return bool(vals[-1] >= vals.max())


def loglog_slope(k, values) -> float:
    """Least-squares slope of ``log values`` against ``log(k+1)``."""
    return float(np.polyfit(np.log(np.asarray(k, dtype=float) + 1), np.log(np.abs(values)), 1)[0])


# ---------------------------------------------------------------------------
# Hausdorff-Young for power series

def moment_weights(alpha: float, K: int) -> np.ndarray:
    """``||z^k||^2_{2,alpha} = k! Gamma(2+a) / Gamma(k+2+a)`` for k < K."""
    k = np.arange(K, dtype=float)
    out = np.ones(K)
    if K > 1:
        out[1:] = np.cumprod((k[1:]) / (k[1:] + 1 + alpha))
    return out


class HYResult(NamedTuple):
    lhs: float
    rhs: float
    margin: float


def polynomial_rule(alpha: float, K: int, n_r: int = 64) -> QuadRule:
    n_theta = 4 * K + 64
    n_theta += n_theta % 2
    return build_rule(n_r, n_theta, alpha)


def hausdorff_young_check(coeffs: SeriesCoeffs, params: SpaceParams,
                          rule: QuadRule | None = None) -> HYResult:
    """``||sum a_k z^k||^q_{p,a}`` against ``sum lam_k^(q-1) |a_k|^q`` for p >= 2."""
    if params.p < 2:
        raise DomainError("the coefficient inequality needs p >= 2")
    c = np.asarray(coeffs.coeffs)
    rule = rule or polynomial_rule(params.alpha, c.size)
    q = params.q
    lhs = coeffs.lp_norm_on(rule, params.p) ** q
    lam = moment_weights(params.alpha, c.size)
    rhs = float(np.sum(lam ** (q - 1) * np.abs(c) ** q))
    return HYResult(lhs, rhs, rhs - lhs)


# ---------------------------------------------------------------------------
# monotonicity in p

def norm_monotonicity_check(p_list, alpha: float, xi_abs: float = 0.99,
                            slack: float = 1e-3) -> bool:
    ps = [float(p) for p in p_list]
    if any(p < 2 for p in ps) or ps != sorted(ps):
        raise DomainError("p_list must be ascending with every p >= 2")
    lower = [conjectured_norm(SpaceParams(p, alpha)) for p in ps]
    if any(b < a for a, b in zip(lower, lower[1:])):
        return False
    quot = [rayleigh_quotient_f_xi(xi_abs, SpaceParams(p, alpha)) for p in ps]
    return all(b >= a - slack for a, b in zip(quot, quot[1:]))


# ---------------------------------------------------------------------------
# the elementary inequality max(|w|^p, |z|^p) <= a|w + conj z|^p - b Re (wz)^(p/2)

class HVResult(NamedTuple):
    violations: int
    max_feasible_b: float


def hv_inequality_check(p: float, a: float, b: float, n_samples: int, seed: int,
                        chunk: int = 1 << 18) -> HVResult:
    if not 1 < p <= 2:
        raise DomainError("p must lie in (1, 2]")
    if not a > 0:
        raise DomainError("a must be positive")
    rng = np.random.default_rng(seed)
    violations = 0
    best = math.inf
    done = 0
    while done < n_samples:
        n = min(chunk, n_samples - done)
        mods = 10.0 ** rng.uniform(-3, 3, size=(2, n))
        phases = rng.uniform(0, 2 * np.pi, size=(2, n))
        w = mods[0] * np.exp(1j * phases[0])
        z = mods[1] * np.exp(1j * phases[1])
        lhs = np.maximum(mods[0], mods[1]) ** p
        first = a * np.abs(w + np.conj(z)) ** p
        re = ((w * z) ** (p / 2)).real
        scale = np.maximum(lhs, first) + abs(b) * np.abs(w * z) ** (p / 2)
        violations += int(np.count_nonzero(lhs > first - b * re + 1e-12 * scale))
        pos = re > 0
        if pos.any():
            best = min(best, float(np.min((first[pos] - lhs[pos]) / re[pos])))
        done += n
    return HVResult(violations, best)


# ---------------------------------------------------------------------------
# report rows

@dataclass
class NormReport:
    params: SpaceParams
    lower_formula: float
    upper_formula: float
    dostanic: float
    rayleigh_estimates: list[tuple[float, float]] = field(default_factory=list)
    bilinear_estimates: list[tuple[float, float]] = field(default_factory=list)
    diagnostics: dict = field(default_factory=dict)


def norm_report(params: SpaceParams, xi_list=(), eps_list=()) -> NormReport:
    report = NormReport(params, conjectured_norm(params), upper_bound_norm(params),
                        dostanic_value(params.p))
    report.rayleigh_estimates = rayleigh_sweep(xi_list, params)
    report.bilinear_estimates = [(float(e), bilinear_form_value(e, params)) for e in eps_list]
    if report.rayleigh_estimates:
        best = max(v for _, v in report.rayleigh_estimates)
        report.diagnostics["rayleigh_gap_to_lower"] = report.lower_formula - best
    if report.bilinear_estimates:
        best = max(v for _, v in report.bilinear_estimates)
        report.diagnostics["bilinear_gap_to_upper"] = report.upper_formula - best
    return report

