"""Bergman projection P_alpha, its maximal version, and the test family f_xi.

Projections of sampled fields are computed by direct quadrature of the
kernel integral. For the test functions ``f_xi`` the projection is instead
carried by its Taylor coefficients in ``z``; power series are evaluated on a
polar rule ring by ring with an FFT, which is what makes boundary-near
``xi`` affordable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .diskquad import QuadRule, SampledField, build_rule
from .errors import BudgetExceededError, DomainError
from .specfun import hyp2f1, hyp2f1_series_batch

_CHUNK = 1 << 22


@dataclass(frozen=True)
class SpaceParams:
    """Exponent ``p`` and weight ``alpha`` of the space L^p_alpha."""

    p: float
    alpha: float

    def __post_init__(self):
        if not 1 < self.p < math.inf:
            raise DomainError(f"p must lie in (1, inf), got {self.p}")
        if not self.alpha > -1:
            raise DomainError(f"alpha must exceed -1, got {self.alpha}")

    @property
    def q(self) -> float:
        return self.p / (self.p - 1.0)

    @property
    def beta(self) -> float:
        return (2.0 + self.alpha) / 2.0

    def dual(self) -> SpaceParams:
        return SpaceParams(self.q, self.alpha)


@dataclass(frozen=True)
class TestFunctionXi:
    """``f_xi(z) = (1 - xi conj(z))^(beta - 2 beta/p) (1 - z conj(xi))^(-beta)``."""

    __test__ = False  # keep pytest from collecting this as a test class

    xi: complex
    params: SpaceParams

    def __post_init__(self):
        if not abs(self.xi) < 1:
            raise DomainError(f"|xi| must be < 1, got {abs(self.xi)}")


@dataclass(frozen=True)
class SeriesCoeffs:
    """Truncated power series ``sum_{k<K} coeffs[k] z^k``.

    ``tail_bound`` bounds ``sum_{k>=K} |c_k|``, i.e. the truncation error
    anywhere on the closed unit disk, under a geometric model of the tail.
    """

    coeffs: np.ndarray
    tail_bound: float = 0.0

    @property
    def truncation(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def evaluate(self, points) -> np.ndarray:
        pts = np.asarray(points, dtype=complex)
        # Horner, highest degree first
        out = np.zeros_like(pts)
        for c in self.coeffs[::-1]:
            out = out * pts + c
        return out

    def ring_values(self, rule: QuadRule, rows=None) -> np.ndarray:
        """Values on the rule's grid (or a subset of its rings), via FFT."""
        rows = np.arange(rule.s.size) if rows is None else np.asarray(rows)
        n_theta = rule.angular_count
        k = np.arange(self.truncation)
        log_r = 0.5 * np.log1p(-rule.s_c[rows])
        powers = np.exp(np.outer(log_r, k))
        scaled = powers * self.coeffs[None, :]
        pad = (-self.truncation) % n_theta
        if pad:
            scaled = np.concatenate([scaled, np.zeros((rows.size, pad))], axis=1)
        folded = scaled.reshape(rows.size, -1, n_theta).sum(axis=1)
        return np.fft.ifft(folded, axis=1) * n_theta

    def on_rule(self, rule: QuadRule) -> SampledField:
        return SampledField(self.ring_values(rule), rule)

    def lp_norm_on(self, rule: QuadRule, p: float) -> float:
        """``||sum c_k z^k||_{p,alpha}`` on ``rule`` without storing the full grid."""
        per_ring = max(1, _CHUNK // max(rule.angular_count, self.truncation))
        acc = 0.0
        for start in range(0, rule.s.size, per_ring):
            rows = np.arange(start, min(start + per_ring, rule.s.size))
            vals = self.ring_values(rule, rows)
            ring_mean = (np.abs(vals) ** p).mean(axis=1)
            acc += np.dot(rule.radial_weights[rows], ring_mean)
        return float(acc) ** (1.0 / p)


def _kernel_apply(f: SampledField, eval_points, alpha, modulus):
    rule = f.rule
    if not math.isclose(rule.alpha, alpha, rel_tol=0, abs_tol=1e-14):
        raise DomainError(f"field lives on a rule for alpha={rule.alpha}, not {alpha}")
    pts = np.atleast_1d(np.asarray(eval_points, dtype=complex))
    if np.any(np.abs(pts) >= 1):
        raise DomainError("evaluation points must lie in the open unit disk")
    nodes = rule.points.ravel()
    wf = (rule.weights * f.values).ravel()
    out = np.empty(pts.size, dtype=complex)
    per = max(1, _CHUNK // nodes.size)
    for start in range(0, pts.size, per):
        z = pts[start:start + per, None]
        base = 1.0 - z * np.conj(nodes)[None, :]
        if modulus:
            kern = np.abs(base) ** (-(2.0 + alpha))
        else:
            kern = base ** (-(2.0 + alpha))
        out[start:start + per] = kern @ wf
    return out


def apply_P_alpha(f: SampledField, alpha: float, eval_points) -> np.ndarray:
    """``int f(w) (1 - z conj(w))^(-(2+alpha)) dA_alpha(w)`` at each point."""
    return _kernel_apply(f, eval_points, alpha, modulus=False)


def apply_P_sharp(f: SampledField, alpha: float, eval_points) -> np.ndarray:
    """Same integral with the kernel replaced by its modulus."""
    return _kernel_apply(f, eval_points, alpha, modulus=True)


def f_xi_values(t: TestFunctionXi, points) -> np.ndarray:
    # 1 - xi conj(z) and 1 - z conj(xi) lie in the right half-plane, where
    # the principal branch is continuous
    z = np.asarray(points, dtype=complex)
    beta, p = t.params.beta, t.params.p
    xi = complex(t.xi)
    return (1 - xi * np.conj(z)) ** (beta - 2 * beta / p) * (1 - z * np.conj(xi)) ** (-beta)


def f_xi_norm(t: TestFunctionXi) -> float:
    """Closed form ``||f_xi||_{p,alpha} = 2F1(beta, beta; 2+alpha; |xi|^2)^(1/p)``."""
    beta = t.params.beta
    x = abs(t.xi) ** 2
    return hyp2f1(beta, beta, 2.0 + t.params.alpha, x) ** (1.0 / t.params.p)


def default_truncation(xi_abs: float, tol: float) -> int:
    if xi_abs == 0:
        return 51
    return int(math.ceil(math.log(tol) / math.log(xi_abs))) + 50


def _geometric_tail(last_abs: float, ratio: float) -> float:
    if ratio >= 1:
        return math.inf
    return last_abs * ratio / (1.0 - ratio)


def f_xi_series_parts(t: TestFunctionXi, K: int):
    """``((beta)_k / k!, 2F1(2beta/p - beta, beta+k; 2beta+k; |xi|^2), conj(xi)^k)`` for k < K."""
    beta, p = t.params.beta, t.params.p
    xi = complex(t.xi)
    xa = abs(xi)
    k = np.arange(K, dtype=float)
    poch = np.ones(K)
    if K > 1:
        poch[1:] = np.cumprod((beta + k[:-1]) / (k[:-1] + 1.0))
    hyp = hyp2f1_series_batch(2 * beta / p - beta, beta + k, 2 * beta + k, xa * xa)
    if xa == 0:
        powers = np.zeros(K, dtype=complex)
        powers[0] = 1.0
    else:
        powers = np.exp(k * (math.log(xa) - 1j * math.atan2(xi.imag, xi.real)))
    return poch, hyp, powers


def series_tail(coeffs: np.ndarray, xi_abs: float, growth: float) -> float:
    """Geometric tail model past the last coefficient, with a safety factor 2."""
    K = coeffs.size
    if xi_abs == 0:
        return 0.0
    ratio = xi_abs * max(1.0, (growth + K) / (K + 1.0))
    return 2.0 * _geometric_tail(abs(coeffs[-1]), ratio)


def project_f_xi_series(t: TestFunctionXi, K: int | None = None,
                        tol: float = 1e-12) -> SeriesCoeffs:
    """Taylor coefficients of ``P_alpha f_xi`` in ``z``.

    ``c_k = (beta)_k / k! * 2F1(2beta/p - beta, beta + k; 2beta + k; |xi|^2) * conj(xi)^k``.
    """
    xa = abs(complex(t.xi))
    explicit = K is not None
    K = default_truncation(xa, tol) if K is None else int(K)
    if K < 1:
        raise DomainError("K must be positive")
    poch, hyp, powers = f_xi_series_parts(t, K)
    coeffs = poch * hyp * powers
    tail = series_tail(coeffs, xa, t.params.beta)
    if explicit and tail > tol:
        raise BudgetExceededError(
            f"K={K} leaves a tail of {tail:.3g} > tol={tol:g}", partial=coeffs, terms_used=K
        )
    return SeriesCoeffs(coeffs, tail)


def boundary_rule(xi_abs: float, alpha: float, per_panel: int = 32,
                  n_theta: int | None = None) -> QuadRule:
    """Rule resolving functions that peak at distance ``1 - |xi|`` from the circle.

    Radial panels are graded down to ~1e-3 of the peak width; the angle count
    is a power of two with spacing well under the peak width.
    """
    width = max(1.0 - xi_abs, 1e-12)
    refinement = max(2, int(math.ceil(math.log10(100.0 / width))))
    if n_theta is None:
        n_theta = 1 << max(9, int(math.ceil(math.log2(60.0 / width))))
    return build_rule(per_panel * (refinement + 1), n_theta, alpha, refinement)
