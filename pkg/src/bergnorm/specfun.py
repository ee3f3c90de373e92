"""Gamma-family helpers and the Gauss hypergeometric function on real arguments.

Evaluation of ``2F1(a, b; c; lam)`` picks one of several routes:

* the defining power series when ``lam <= 0.5`` (or when the series
  terminates because ``a`` or ``b`` is a nonpositive integer);
* Euler's transformation ``F(a,b;c;lam) = (1-lam)^(c-a-b) F(c-a,c-b;c;lam)``
  when ``lam > 0.5`` and ``c - a - b < 0``;
* the connection formula about ``lam = 1`` for ``lam > 0.9``, in its
  generic form when ``c - a - b`` is not an integer and in its logarithmic
  form when it is;
* the Euler integral representation, used only when ``c - a - b`` is within
  a hair of an integer (where both connection forms lose digits) and
  ``c > b > 0``.

Points very close to 1 can be passed together with their exact distance to 1
(``lam_c``), which the near-one formulas use directly instead of ``1 - lam``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate, special

from .errors import BudgetExceededError, DivergenceError, DomainError

TERM_BUDGET = 100_000
DEFAULT_TOL = 1e-15
EPS = np.finfo(float).eps

# lam above which the connection formula about 1 replaces the plain series
_NEAR_ONE = 0.9
# |c-a-b - nearest integer| below which c-a-b is treated as that integer
_INT_SNAP = 1e-12
# ... and below which the non-integer connection formula is considered unsafe
_NEAR_INT = 1e-5


class Strategy(str, enum.Enum):
    DIRECT_SERIES = "direct-series"
    EULER_TRANSFORM = "euler-transform"
    CONNECTION = "connection"
    INTEGRAL_REP = "integral-rep"
    GAUSS_AT_ONE = "gauss-at-one"


@dataclass(frozen=True)
class Hyp2F1Args:
    """Parameters of ``2F1(a, b; c; lam)``.

    ``lam_c`` optionally carries ``1 - lam`` exactly; it lets callers reach
    points like ``1 - 1e-40`` that do not exist as doubles.
    """

    a: float
    b: float
    c: float
    lam: float
    lam_c: float | None = None

    def __post_init__(self):
        if is_nonpositive_integer(self.c):
            raise DomainError(f"c = {self.c} is a nonpositive integer")
        if self.lam_c is not None:
            if not 0.0 < self.lam_c < 2.0:
                raise DomainError(f"1 - lam = {self.lam_c} outside (0, 2)")
        elif not -1.0 < self.lam < 1.0:
            raise DomainError(f"lam = {self.lam} outside (-1, 1)")

    @property
    def one_minus_lam(self) -> float:
        return self.lam_c if self.lam_c is not None else 1.0 - self.lam


@dataclass(frozen=True)
class EvalResult:
    value: float
    est_abs_error: float
    terms_used: int
    strategy: Strategy


def is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def ln_gamma(x: float) -> float:
    """Natural log of Gamma for ``x > 0``."""
    if not x > 0 or math.isinf(x):
        raise DomainError(f"ln_gamma needs a finite positive argument, got {x}")
    if 1e-300 < x < 171.0:
        # log(gamma) keeps exp(result) within a few ulp of Gamma; lgamma
        # alone drifts to ~2e-13 relative error near x = 150
        return math.log(math.gamma(x))
    return math.lgamma(x)


def _signed_ln_gamma(x: float) -> tuple[int, float]:
    """(sign, log|Gamma(x)|) for any real x that is not a pole."""
    if is_nonpositive_integer(x):
        raise DomainError(f"Gamma has a pole at {x}")
    if x > 0:
        return 1, ln_gamma(x)
    sign = -1 if math.floor(x) % 2 else 1
    return sign, math.lgamma(x)


def gamma_ratio(num, den) -> float:
    """``prod Gamma(num) / prod Gamma(den)`` with sign tracking.

    A pole in the denominator makes the ratio zero; a pole in the numerator
    raises ``DomainError``.
    """
    num = [float(x) for x in num]
    den = [float(x) for x in den]
    if any(is_nonpositive_integer(x) for x in den):
        if any(is_nonpositive_integer(x) for x in num):
            raise DomainError("poles in both numerator and denominator")
        return 0.0
    if all(abs(x) < 160.0 for x in num + den):
        value = 1.0
        try:
            for x in num:
                value *= math.gamma(x)
            for x in den:
                value /= math.gamma(x)
        except OverflowError:  # tiny arguments; the log path copes
            value = math.nan
        if math.isfinite(value) and value != 0.0:
            return value
    sign, logsum = 1, 0.0
    for x in num:
        s, lg = _signed_ln_gamma(x)
        sign *= s
        logsum += lg
    for x in den:
        s, lg = _signed_ln_gamma(x)
        sign *= s
        logsum -= lg
    return sign * math.exp(logsum)


def pochhammer(a: float, k: int) -> float:
    """Rising factorial ``a (a+1) ... (a+k-1)`` as an explicit product."""
    if k < 0 or int(k) != k:
        raise DomainError(f"pochhammer needs a nonnegative integer k, got {k}")
    value = 1.0
    for j in range(int(k)):
        value *= a + j
    return value


def _terminating_order(a: float, b: float) -> int | None:
    orders = [int(-x) for x in (a, b) if is_nonpositive_integer(x)]
    return min(orders) if orders else None


def _direct_series(a, b, c, lam, tol, budget=TERM_BUDGET) -> EvalResult:
    n_stop = _terminating_order(a, b)
    total = 1.0
    term = 1.0
    abs_sum = 1.0
    if n_stop is not None:
        for n in range(n_stop):
            term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * lam
            total += term
            abs_sum += abs(term)
        return EvalResult(total, 4 * EPS * abs_sum, n_stop + 1, Strategy.DIRECT_SERIES)

    # past n_mono the ratio approaches lam monotonically, so
    # max(|ratio|, |lam|) bounds every later ratio
    n_mono = 2 * max(abs(a), abs(b), abs(c), 1.0) + 2
    quiet = 0
    n = 0
    while True:
        ratio = (a + n) * (b + n) / ((c + n) * (n + 1)) * lam
        term *= ratio
        total += term
        abs_sum += abs(term)
        n += 1
        rho = max(abs(ratio), abs(lam))
        if n > n_mono and rho < 1.0:
            tail = abs(term) * rho / (1.0 - rho)
            if tail <= tol * max(abs(total), 1e-300):
                quiet += 1
                if quiet >= 3:
                    err = tail + 8 * EPS * abs_sum
                    return EvalResult(total, err, n + 1, Strategy.DIRECT_SERIES)
            else:
                quiet = 0
        if n >= budget:
            raise BudgetExceededError(
                f"2F1({a}, {b}; {c}; {lam}) series did not converge in {budget} terms",
                partial=total,
                terms_used=n,
            )


def _connection_generic(a, b, c, omx, tol) -> EvalResult:
    """Connection formula about 1 for non-integer s = c - a - b."""
    s = c - a - b
    coef1 = gamma_ratio([c, s], [c - a, c - b])
    coef2 = gamma_ratio([c, -s], [a, b])
    part1 = part2 = 0.0
    err1 = err2 = 0.0
    n = 0
    if coef1 != 0.0:
        r1 = _direct_series(a, b, 1.0 - s, omx, tol)
        part1, err1, n = coef1 * r1.value, abs(coef1) * r1.est_abs_error, r1.terms_used
    if coef2 != 0.0:
        r2 = _direct_series(c - a, c - b, 1.0 + s, omx, tol)
        scale = coef2 * omx**s
        part2, err2 = scale * r2.value, abs(scale) * r2.est_abs_error
        n += r2.terms_used
    value = part1 + part2
    err = err1 + err2 + 32 * EPS * (abs(part1) + abs(part2))
    return EvalResult(value, err, n, Strategy.CONNECTION)


def _connection_integer(a, b, c, m, omx, tol, budget=TERM_BUDGET) -> EvalResult:
    """Logarithmic connection formula for c = a + b + m, m a nonnegative integer."""
    finite = 0.0
    if m > 0:
        pref = math.gamma(m) * gamma_ratio([c], [a + m, b + m])
        term = 1.0
        acc = 0.0
        for n in range(m):
            if n > 0:
                term *= (a + n - 1) * (b + n - 1) / (n * (n - m)) * omx
            acc += term
        finite = pref * acc

    pref = -((-omx) ** m) * gamma_ratio([c], [a, b])
    if pref == 0.0:
        return EvalResult(finite, 8 * EPS * abs(finite), m, Strategy.CONNECTION)
    log_omx = math.log(omx)
    psi_1 = float(special.digamma(1.0))
    psi_m1 = float(special.digamma(m + 1.0))
    psi_a = float(special.digamma(a + m))
    psi_b = float(special.digamma(b + m))
    t = 1.0 / math.factorial(m)
    total = t * (log_omx - psi_1 - psi_m1 + psi_a + psi_b)
    abs_sum = abs(total)
    n = 0
    quiet = 0
    n_mono = 2 * max(abs(a), abs(b), m, 1.0) + 2
    while True:
        t *= (a + m + n) * (b + m + n) / ((n + 1) * (n + m + 1)) * omx
        psi_1 += 1.0 / (n + 1)
        psi_m1 += 1.0 / (n + m + 1)
        psi_a += 1.0 / (a + m + n)
        psi_b += 1.0 / (b + m + n)
        n += 1
        contrib = t * (log_omx - psi_1 - psi_m1 + psi_a + psi_b)
        total += contrib
        abs_sum += abs(contrib)
        if n > n_mono:
            # brackets grow only logarithmically; 2x covers that drift
            tail = 2.0 * abs(contrib) * omx / (1.0 - omx)
            if tail <= tol * max(abs(total), 1e-300):
                quiet += 1
                if quiet >= 3:
                    break
            else:
                quiet = 0
        if n >= budget:
            raise BudgetExceededError(
                "logarithmic connection series did not converge", partial=total, terms_used=n
            )
    value = finite + pref * total
    err = abs(pref) * (tail + 32 * EPS * abs_sum) + 32 * EPS * abs(finite)
    return EvalResult(value, err, n + m, Strategy.CONNECTION)


def _integral_rep(a, b, c, omx, tol) -> EvalResult:
    """Euler integral with the algebraic endpoint weights handled by QUADPACK's QAWS."""
    if not c > b > 0:
        a, b = b, a
    if not c > b > 0:
        raise DomainError("integral representation needs c > b > 0")
    pref = gamma_ratio([c], [b, c - b])

    def integrand(t):
        return ((1.0 - t) + t * omx) ** (-a)

    val, err, info = integrate.quad(
        integrand, 0.0, 1.0, weight="alg", wvar=(b - 1.0, c - b - 1.0),
        epsabs=0.0, epsrel=max(tol, 1e-14), limit=400, full_output=True,
    )[:3]
    return EvalResult(pref * val, abs(pref) * err, int(info["neval"]), Strategy.INTEGRAL_REP)


def _direct_affordable(a, b, c, lam, tol) -> bool:
    if lam <= 0:
        return True
    need = math.log(tol * (1.0 - lam)) / math.log(lam)
    return need + 2 * max(abs(a), abs(b), abs(c)) < 0.5 * TERM_BUDGET


def _near_one(a, b, c, lam, omx, tol) -> EvalResult:
    """2F1 for 0.5 < lam < 1 with c - a - b >= 0."""
    if lam <= _NEAR_ONE and omx >= 1.0 - _NEAR_ONE:
        return _direct_series(a, b, c, lam, tol)
    s = c - a - b
    m = round(s)
    dist = abs(s - m)
    if dist <= _INT_SNAP * max(1.0, abs(s)):
        return _connection_integer(a, b, a + b + m, int(m), omx, tol)
    if dist > _NEAR_INT:
        return _connection_generic(a, b, c, omx, tol)
    if c > b > 0 or c > a > 0:
        return _integral_rep(a, b, c, omx, tol)
    if _direct_affordable(a, b, c, lam, tol):
        return _direct_series(a, b, c, lam, tol)
    return _connection_generic(a, b, c, omx, tol)


def hyp2f1_eval(args: Hyp2F1Args, tol: float = DEFAULT_TOL) -> EvalResult:
    """Evaluate ``2F1(a, b; c; lam)`` and report how it was done."""
    if not tol > 0:
        raise DomainError("tol must be positive")
    a, b, c, lam = args.a, args.b, args.c, args.lam
    omx = args.one_minus_lam
    if args.lam_c is not None:
        lam = 1.0 - omx
    if a == 0.0 or b == 0.0:
        return EvalResult(1.0, 0.0, 1, Strategy.DIRECT_SERIES)
    if _terminating_order(a, b) is not None or lam <= 0.5:
        return _direct_series(a, b, c, lam, tol)
    s = c - a - b
    if s < 0:
        inner = hyp2f1_eval(Hyp2F1Args(c - a, c - b, c, lam, omx), tol)
        scale = omx**s
        value = scale * inner.value
        return EvalResult(
            value,
            abs(scale) * inner.est_abs_error + 32 * EPS * abs(value),
            inner.terms_used,
            Strategy.EULER_TRANSFORM,
        )
    return _near_one(a, b, c, lam, omx, tol)


def hyp2f1(a: float, b: float, c: float, lam: float, tol: float = DEFAULT_TOL,
           lam_c: float | None = None) -> float:
    """Value of ``2F1(a, b; c; lam)``; see :func:`hyp2f1_eval`."""
    return hyp2f1_eval(Hyp2F1Args(a, b, c, lam, lam_c), tol).value


def hyp2f1_at_one(a: float, b: float, c: float) -> float:
    """Gauss's summation ``Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b))``."""
    if is_nonpositive_integer(c):
        raise DomainError(f"c = {c} is a nonpositive integer")
    if not c - a - b > 0:
        raise DivergenceError(f"2F1({a}, {b}; {c}; 1) diverges: c - a - b = {c - a - b} <= 0")
    return gamma_ratio([c, c - a - b], [c - a, c - b])


def hyp2f1_derivative(args: Hyp2F1Args, k: int, tol: float = DEFAULT_TOL) -> EvalResult:
    """k-th derivative in lam via ``(a)_k (b)_k / (c)_k * F(a+k, b+k; c+k; lam)``."""
    if k < 1 or int(k) != k:
        raise DomainError("derivative order must be a positive integer")
    factor = pochhammer(args.a, k) * pochhammer(args.b, k) / pochhammer(args.c, k)
    if factor == 0.0:
        return EvalResult(0.0, 0.0, 0, Strategy.DIRECT_SERIES)
    shifted = Hyp2F1Args(args.a + k, args.b + k, args.c + k, args.lam, args.lam_c)
    res = hyp2f1_eval(shifted, tol)
    return EvalResult(
        factor * res.value, abs(factor) * res.est_abs_error, res.terms_used, res.strategy
    )


def hyp2f1_series_batch(a: float, b, c, lam: float, tol: float = 1e-15,
                        budget: int = TERM_BUDGET) -> np.ndarray:
    """Direct series for many ``(b_i, c_i)`` pairs sharing ``a`` and ``lam``.

    Meant for families like ``F(a, beta+k; 2beta+k; x)`` over k, where one
    vectorised pass is far cheaper than thousands of scalar calls.
    Requires ``0 <= lam < 1``.
    """
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    if not 0 <= lam < 1:
        raise DomainError("batch series needs 0 <= lam < 1")
    if np.any((c <= 0) & (c == np.floor(c))):
        raise DomainError("c contains a nonpositive integer")
    shape = np.broadcast(b, c).shape
    out = np.ones(shape).ravel()
    if a == 0.0 or lam == 0.0:
        return out.reshape(shape)
    # active members live in compacted arrays; converged ones are written back
    idx = np.arange(out.size)
    bf = np.broadcast_to(b, shape).ravel().copy()
    cf = np.broadcast_to(c, shape).ravel().copy()
    tot = np.ones(out.size)
    tm = np.ones(out.size)
    # once a+n, b+n, c+n > 0 the factors (a+m)/(m+1) and (b+m)/(c+m) move
    # monotonically toward 1, which bounds every later ratio
    n_safe = max(-a, float(np.max(-bf)), float(np.max(-cf)), 0.0) + 1.0
    n_stop = _terminating_order(a, 1.0)
    n = 0
    while idx.size:
        tm *= (a + n) * (bf + n) / ((cf + n) * (n + 1)) * lam
        tot += tm
        n += 1
        if n_stop is not None and n >= n_stop:
            break
        if n >= n_safe and n % 8 == 0:
            rho = lam * max(1.0, abs(a + n) / (n + 1)) * np.maximum(1.0, (bf + n) / (cf + n))
            tail = np.abs(tm) * rho / np.maximum(1.0 - rho, 1e-300)
            keep = (rho >= 1.0) | (tail > tol * np.abs(tot))
            if not keep.all():
                done = ~keep
                out[idx[done]] = tot[done]
                idx, bf, cf, tot, tm = idx[keep], bf[keep], cf[keep], tot[keep], tm[keep]
        if n >= budget and idx.size:
            out[idx] = tot
            raise BudgetExceededError(
                f"batch series: {idx.size} members unconverged after {budget} terms",
                partial=out.reshape(shape), terms_used=n,
            )
    out[idx] = tot
    return out.reshape(shape)
