"""Closed forms for weighted kernel integrals, each paired with a quadrature oracle.

Every check returns the closed-form side, an independently computed numeric
side and their absolute difference. One-dimensional integrals go through
QUADPACK's algebraic-weight routine so endpoint singularities sit in the
weight; disk integrals use the polar rules of :mod:`bergnorm.diskquad`.
"""

from __future__ import annotations

import enum
import math
from typing import NamedTuple

import numpy as np
from scipy import integrate as spi

from .diskquad import QuadRule, build_rule, integrate
from .errors import BudgetExceededError, DomainError, InconclusiveError
from .specfun import gamma_ratio, hyp2f1, hyp2f1_series_batch

DEFAULT_NR = 256
DEFAULT_NTHETA = 512
DEFAULT_REFINE = 4
FR_RADII = (0.9, 0.99, 0.999, 0.9999)
FR_THRESHOLD = 0.05


class Comparison(NamedTuple):
    closed_form: float
    numeric: complex | float
    abs_diff: float


class ForelliRudinClass(str, enum.Enum):
    BOUNDED = "bounded"
    LOGARITHMIC = "logarithmic"
    POWER = "power"


def default_rule(alpha: float, n_r: int = DEFAULT_NR, n_theta: int = DEFAULT_NTHETA,
                 refinement: int = DEFAULT_REFINE) -> QuadRule:
    return build_rule(n_r, n_theta, alpha, refinement)


def _alg_quad(func, lo_exp: float, hi_exp: float, tol: float, upper: float = 1.0) -> float:
    """``int_0^upper func(x) x^lo_exp (upper-x)^hi_exp dx``."""
    # QUADPACK refuses relative tolerances below 50 machine epsilons
    val, _ = spi.quad(func, 0.0, upper, weight="alg", wvar=(lo_exp, hi_exp),
                      epsabs=0.0, epsrel=max(tol, 2e-14), limit=500)
    return val


def weighted_hyp_integral(a: float, b: float, c: float, lo_exp: float, hi_exp: float,
                          tol: float = 1e-12) -> float:
    """``int_0^1 x^lo_exp (1-x)^hi_exp 2F1(a,b;c;x) dx``.

    The interval is split at 1/2. On the upper half the integral runs in
    ``y = 1 - x`` and the connection formula about ``x = 1`` writes the
    hypergeometric factor as ``A F1(y) + B y^s F2(y)`` with ``s = c-a-b``,
    so each piece carries its exact endpoint exponent in the weight.
    """
    def lower(x):
        return (1 - x) ** hi_exp * hyp2f1(a, b, c, x)

    total = _alg_quad(lower, lo_exp, 0.0, tol, upper=0.5)
    s = c - a - b
    if abs(s - round(s)) < 1e-3:
        # near-integer s: the split coefficients cancel badly; the remaining
        # y^n log y behaviour is mild enough for the adaptive rule
        shift = min(s, 0.0)

        def upper_near(y):
            y = max(y, 1e-300)  # the modified Clenshaw-Curtis rule samples y = 0
            if shift < 0:
                return (1 - y) ** lo_exp * y ** (-shift) * hyp2f1(a, b, c, 1 - y, lam_c=y)
            return (1 - y) ** lo_exp * hyp2f1(a, b, c, 1 - y, lam_c=y)

        return total + _alg_quad(upper_near, hi_exp + shift, 0.0, tol, upper=0.5)
    coef_a = gamma_ratio([c, s], [c - a, c - b])
    coef_b = gamma_ratio([c, -s], [a, b])
    if coef_a != 0.0:
        total += coef_a * _alg_quad(
            lambda y: (1 - y) ** lo_exp * hyp2f1(a, b, 1 - s, y), hi_exp, 0.0, tol, upper=0.5)
    if coef_b != 0.0:
        total += coef_b * _alg_quad(
            lambda y: (1 - y) ** lo_exp * hyp2f1(c - a, c - b, 1 + s, y), hi_exp + s, 0.0, tol,
            upper=0.5)
    return total


def beta_hyp_integral(a: float, b: float, c: float, delta: float,
                      tol: float = 1e-12) -> float:
    """``int_0^1 t^(c-1) (1-t)^(delta-1) 2F1(a,b;c;t) dt`` by quadrature."""
    return weighted_hyp_integral(a, b, c, c - 1.0, delta - 1.0, tol)


def beta_hyp_closed_form(a: float, b: float, c: float, delta: float) -> float:
    return gamma_ratio([c, delta, delta + c - a - b], [delta + c - a, delta + c - b])


def beta_hyp_check(a: float, b: float, c: float, delta: float,
                   tol: float = 1e-10) -> Comparison:
    """Beta-weighted integral of ``2F1(a,b;c;.)`` against its Gamma closed form."""
    if not (c > 0 and delta > 0 and delta + c - a - b > 0):
        raise DomainError("need c > 0, delta > 0 and delta + c - a - b > 0")
    rhs = beta_hyp_closed_form(a, b, c, delta)
    lhs = beta_hyp_integral(a, b, c, delta)
    return Comparison(rhs, lhs, abs(lhs - rhs))


def three_kernel_series(z: complex, w: complex, a: float, b: float, c: float,
                        t: float, K: int | None = None, tol: float = 1e-12):
    """Series for ``int (1-|xi|^2)^t / ((1-z conj xi)^a (1-w conj xi)^b (1-xi conj w)^c) dA``.

    Returns ``(value, tail_estimate)``.
    """
    z, w = complex(z), complex(w)
    u = z * w.conjugate()
    ua = abs(u)
    explicit = K is not None
    if K is None:
        K = 1 if ua == 0 else int(math.ceil(math.log(tol) / math.log(ua))) + 50
    j = np.arange(K, dtype=float)
    # (a)_j (c)_j / ((2+t)_j j!) by a running product
    ratio = np.ones(K)
    if K > 1:
        ratio[1:] = np.cumprod((a + j[:-1]) * (c + j[:-1]) / ((2 + t + j[:-1]) * (j[:-1] + 1)))
    hyp = hyp2f1_series_batch(b, c + j, 2 + t + j, abs(w) ** 2)
    terms = ratio * hyp * u ** j
    last = abs(terms[-1])
    rho = ua * max(1.0, abs((a + K) * (c + K) / ((2 + t + K) * (K + 1))))
    tail = 0.0 if last == 0 else (math.inf if rho >= 1 else 2 * last * rho / (1 - rho))
    if explicit and tail > tol:
        raise BudgetExceededError(f"K={K} leaves tail {tail:.3g} > {tol:g}",
                                  partial=terms.sum() / (1 + t), terms_used=K)
    return complex(terms.sum()) / (1 + t), tail / (1 + t)


def three_kernel_check(z: complex, w: complex, a: float, b: float, c: float, t: float,
                       K: int | None = None, tol: float = 1e-12,
                       rule: QuadRule | None = None) -> Comparison:
    """Series expansion of a three-factor kernel integral against 2-D quadrature."""
    if not (abs(z) < 1 and abs(w) < 1 and t > -1):
        raise DomainError("need |z| < 1, |w| < 1 and t > -1")
    series, _ = three_kernel_series(z, w, a, b, c, t, K, tol)
    rule = rule or default_rule(t)
    if not math.isclose(rule.alpha, t, abs_tol=1e-14):
        raise DomainError("rule weight exponent must equal t")
    z, w = complex(z), complex(w)

    def integrand(x):
        return ((1 - z * np.conj(x)) ** (-a) * (1 - w * np.conj(x)) ** (-b)
                * (1 - x * w.conjugate()) ** (-c))

    # the rule integrates against (1+t)(1-|x|^2)^t dA
    quad = integrate(rule.sample(integrand)) / (1 + t)
    return Comparison(series, quad, abs(series - quad))


def kernel_power_closed_form(z: complex, a: float, t: float) -> float:
    """``int (1-|xi|^2)^t |1 - z conj xi|^(-2a) dA(xi) = 2F1(a,a;2+t;|z|^2)/(1+t)``."""
    return hyp2f1(a, a, 2 + t, abs(z) ** 2) / (1 + t)


def kernel_power_check(z: complex, a: float, t: float,
                       rule: QuadRule | None = None) -> Comparison:
    if not (abs(z) < 1 and t > -1):
        raise DomainError("need |z| < 1 and t > -1")
    closed = kernel_power_closed_form(z, a, t)
    rule = rule or default_rule(t)
    if not math.isclose(rule.alpha, t, abs_tol=1e-14):
        raise DomainError("rule weight exponent must equal t")
    z = complex(z)
    vals = rule.sample(lambda x: np.abs(1 - z * np.conj(x)) ** (-2 * a))
    quad = integrate(vals).real / (1 + t)
    return Comparison(closed, quad, abs(closed - quad))


def forelli_rudin_classify(t: float, c: float, radii=FR_RADII,
                           threshold: float = FR_THRESHOLD) -> ForelliRudinClass:
    """Growth class of ``int (1-|xi|^2)^t |1 - z conj xi|^-(2+t+c) dA`` as ``|z| -> 1``.

    Each candidate asymptote divides the closed form along ``radii``; the
    class whose ratio moves by less than ``threshold`` (relative) over the
    last two radii wins. Ties go to the slowest-growing candidate.
    """
    if not t > -1:
        raise DomainError("t must exceed -1")
    radii = np.asarray(radii, dtype=float)
    if radii.size < 2 or np.any(np.diff(radii) <= 0) or radii[-1] >= 1 or radii[0] < 0:
        raise DomainError("radii must increase within [0, 1)")
    a = (2 + t + c) / 2
    x = radii ** 2
    omx = (1 - radii) * (1 + radii)
    vals = np.array([hyp2f1(a, a, 2 + t, xi, lam_c=oi) / (1 + t) for xi, oi in zip(x, omx)])
    candidates = [
        (ForelliRudinClass.BOUNDED, np.ones_like(x)),
        (ForelliRudinClass.LOGARITHMIC, np.log(1 / omx)),
        (ForelliRudinClass.POWER, omx ** (-c) if c > 0 else None),
    ]
    for cls, scale in candidates:
        if scale is None:
            continue
        ratio = vals / scale
        if abs(ratio[-1] - ratio[-2]) < threshold * abs(ratio[-1]):
            return cls
    raise InconclusiveError(f"no growth class stabilises over radii {radii.tolist()}")


class SupCheck(NamedTuple):
    closed_form: float
    numeric_sup: float
    abs_diff: float
    argmax_at_edge: bool
    monotone: bool


def sup_value_check(a: float, t: float, depth: int = 8, per_decade: int = 8) -> SupCheck:
    """Weighted supremum of the kernel integral against its Gamma closed form.

    The grid runs in ``1 - |z|^2 = 10^-j`` for ``j`` up to ``depth``.
    """
    if not (t > -1 and a > 1 + t / 2):
        raise DomainError("need t > -1 and a > 1 + t/2")
    closed = gamma_ratio([1 + t, 2 * a - t - 2], [a, a])
    omx = np.concatenate([np.linspace(1.0, 0.1, per_decade, endpoint=False),
                          np.logspace(-1, -depth, per_decade * (depth - 1) + 1)])
    e = 2 * a - t - 2
    vals = np.array([om ** e * hyp2f1(a, a, 2 + t, 1 - om, lam_c=om) / (1 + t) for om in omx])
    i = int(np.argmax(vals))
    monotone = bool(np.all(np.diff(vals) >= -1e-12 * np.abs(vals[1:])))
    # ties count: a constant profile attains its sup at the edge too
    at_edge = bool(vals[-1] >= vals[i] * (1 - 1e-13))
    return SupCheck(closed, float(vals[i]), abs(float(vals[i]) - closed), at_edge, monotone)


def double_integral_closed_form(a: float, b: float, c: float) -> float:
    return gamma_ratio([a, b, 1 + a + b - 2 * c], [1 + a + b - c, 1 + a + b - c])


def double_integral_check(a: float, b: float, c: float, tol: float = 1e-12) -> Comparison:
    """Nested kernel integral: inner integral in closed form, outer by quadrature.

    ``int |z|^2b (1-|z|^2)^(a-1) {int (1-|w|^2)^(b-1) |1-z conj w|^-2c dA(w)} dA(z)``
    reduces to ``(1/b) int_0^1 s^b (1-s)^(a-1) 2F1(c,c;1+b;s) ds``.
    """
    if not (a > 0 and b > 0 and 1 + a + b - 2 * c > 0):
        raise DomainError("need a, b > 0 and 1 + a + b - 2c > 0")
    closed = double_integral_closed_form(a, b, c)
    quad = weighted_hyp_integral(c, c, 1 + b, b, a - 1, tol) / b
    return Comparison(closed, quad, abs(quad - closed))

