"""Series evaluation of the generalized k-Bessel function and friends.

The function evaluated here is, for k > 0, nu > -k and parameter c,

    W(x) = sum_{r>=0} (-c)^r / (Gamma_k(r k + nu + k) * r!) * (x/2)^(2r + nu/k),

together with its normalized even relatives (leading coefficient 1, obtained
by multiplying with (2/x)^(nu/k) Gamma_k(nu+k)), term-wise derivatives,
the three-term order recurrence, the derivative ladder, and the alternating
multisection sum.

Evaluation strategy: the leading term is formed once in log space (so large
nu/k or extreme x cannot overflow the gamma factors), and every later term
follows from the exact functional-equation ratio

    t_{r+1} / t_r = -c (x/2)^2 / ((r+1)(r k + nu + k)),

accumulated in double-double arithmetic.  The only double-rounding the sum
inherits is the leading term's ~2e-16 relative error, which scales the whole
series and is therefore NOT amplified by the massive cancellation the
alternating series suffers at x ~ 10; a naive exp/lgamma evaluation of each
term separately loses ~3 digits there.  Truncation stops once two
consecutive terms fall below rel_tol times the running sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._dd import dd_add, dd_div, dd_mul, dd_mul_d, two_prod
from .errors import DomainError, InvalidParameter, NonConvergence, Overflow
from .kgamma import ln_k_gamma

_MAX_EXP_ARG = 709.782712893384


@dataclass(frozen=True)
class KBesselParams:
    """Parameter triple (k, nu, c); requires k > 0 and nu > -k."""

    k: float
    nu: float
    c: float

    def __post_init__(self):
        if not self.k > 0.0:
            raise InvalidParameter(f"k must be positive, got {self.k}")
        if not self.nu > -self.k:
            raise InvalidParameter(f"nu must exceed -k, got nu={self.nu}, k={self.k}")
        if math.isnan(self.c):
            raise InvalidParameter("c must be a real number, got nan")


@dataclass(frozen=True)
class SeriesConfig:
    rel_tol: float = 1e-14
    max_terms: int = 500

    def __post_init__(self):
        if not 0.0 < self.rel_tol < 1.0:
            raise InvalidParameter(f"rel_tol must be in (0, 1), got {self.rel_tol}")
        if self.max_terms < 1:
            raise InvalidParameter(f"max_terms must be >= 1, got {self.max_terms}")


@dataclass(frozen=True)
class EvalResult:
    value: float
    terms_used: int
    est_error: float


_DEFAULT_CONFIG = SeriesConfig()


def _tail_estimate(first_omitted: float, next_ratio: float, alternating: bool) -> float:
    if alternating:
        return abs(first_omitted)
    # same-sign terms: geometric bound; by the time the stopping rule fires the
    # term ratio is well below 1 (growing terms cannot satisfy it within max_terms)
    if next_ratio < 1.0:
        return abs(first_omitted) / (1.0 - next_ratio)
    return math.inf


def _ratio_series_sum(t0: float, qhi: float, qlo: float, k: float, nu: float,
                      cfg: SeriesConfig) -> tuple[float, int, float]:
    """Sum t_r with t_{r+1} = t_r * q / ((r+1)(r k + nu + k)) in dd arithmetic."""
    shi = slo = 0.0
    thi, tlo = t0, 0.0
    streak = 0
    r = 0
    while True:
        shi, slo = dd_add(shi, slo, thi, tlo)
        # next term, denominator (r+1)(r k + nu + k) built exactly in dd
        phi, plo = two_prod(float(r), k)
        phi, plo = dd_add(phi, plo, nu, 0.0)
        phi, plo = dd_add(phi, plo, k, 0.0)
        dhi, dlo = dd_mul_d(phi, plo, float(r + 1))
        nhi, nlo = dd_mul(thi, tlo, qhi, qlo)
        nhi, nlo = dd_div(nhi, nlo, dhi, dlo)
        if abs(thi) <= cfg.rel_tol * abs(shi):
            streak += 1
            if streak >= 2:
                terms_used = r + 1
                ratio_next = abs(qhi) / ((r + 2) * ((r + 1) * k + nu + k))
                est = _tail_estimate(nhi, ratio_next, alternating=qhi < 0.0)
                return shi + slo, terms_used, est
        else:
            streak = 0
        r += 1
        if r >= cfg.max_terms:
            raise NonConvergence(
                f"series did not meet rel_tol={cfg.rel_tol} within "
                f"max_terms={cfg.max_terms}"
            )
        thi, tlo = nhi, nlo


def _leading_term(p: KBesselParams, x: float) -> float:
    if p.nu == 0.0:
        # (x/2)^0 / Gamma_k(k) is identically 1; bypassing the log/exp round
        # trip keeps the whole sum free of its few-ulp noise
        return 1.0
    ln_t0 = (p.nu / p.k) * math.log(x / 2.0) - ln_k_gamma(p.nu + p.k, p.k)
    if ln_t0 > _MAX_EXP_ARG:
        raise Overflow(
            f"leading series term exceeds double range (log magnitude {ln_t0:.1f})"
        )
    t0 = math.exp(ln_t0)
    if t0 == 0.0:
        raise Overflow("leading series term underflows double range")
    return t0


def eval_w(p: KBesselParams, x: float, cfg: SeriesConfig = _DEFAULT_CONFIG) -> EvalResult:
    """Evaluate W(x) by the defining power series.

    x = 0 is admitted for nu >= 0 (limit values 1 at nu = 0, else 0); negative
    x raises DomainError because x^(nu/k) is not real-valued there.
    """
    if math.isnan(x) or x < 0.0:
        raise DomainError(f"eval_w requires x >= 0, got {x}")
    if x == 0.0:
        if p.nu < 0.0:
            raise DomainError("eval_w at x = 0 requires nu >= 0")
        if p.nu == 0.0:
            # limit 1/Gamma_k(k) = 1
            return EvalResult(1.0, 1, 0.0)
        return EvalResult(0.0, 1, 0.0)
    t0 = _leading_term(p, x)
    if p.c == 0.0:
        return EvalResult(t0, 1, 0.0)
    xh = 0.5 * x
    qhi, qlo = two_prod(xh, xh)
    qhi, qlo = dd_mul_d(qhi, qlo, -p.c)
    value, terms_used, est = _ratio_series_sum(t0, qhi, qlo, p.k, p.nu, cfg)
    return EvalResult(value, terms_used, est)


def _normalized_config_q(x: float, sign: float) -> tuple[float, float]:
    qhi, qlo = two_prod(x, x)
    return dd_mul_d(qhi, qlo, 0.25 * sign)


def eval_normalized_i(p: KBesselParams, x: float,
                      cfg: SeriesConfig = _DEFAULT_CONFIG) -> EvalResult:
    """Normalized all-positive-coefficient series: value 1 at x = 0, even in x.

    Equals (2/x)^(nu/k) Gamma_k(nu+k) W(x) for c = -1; the c field of ``p``
    is ignored.
    """
    if math.isnan(x):
        raise DomainError("eval_normalized_i requires a real x")
    if x == 0.0:
        return EvalResult(1.0, 1, 0.0)
    qhi, qlo = _normalized_config_q(x, 1.0)
    value, terms_used, est = _ratio_series_sum(1.0, qhi, qlo, p.k, p.nu, cfg)
    return EvalResult(value, terms_used, est)


def eval_normalized_j(p: KBesselParams, x: float,
                      cfg: SeriesConfig = _DEFAULT_CONFIG) -> EvalResult:
    """Normalized alternating series (c = +1 flavor): value 1 at x = 0, even."""
    if math.isnan(x):
        raise DomainError("eval_normalized_j requires a real x")
    if x == 0.0:
        return EvalResult(1.0, 1, 0.0)
    qhi, qlo = _normalized_config_q(x, -1.0)
    value, terms_used, est = _ratio_series_sum(1.0, qhi, qlo, p.k, p.nu, cfg)
    return EvalResult(value, terms_used, est)


def eval_w_with_derivatives(p: KBesselParams, x: float,
                            cfg: SeriesConfig = _DEFAULT_CONFIG
                            ) -> tuple[EvalResult, float, float]:
    """(W, W', W'') at x > 0 with the derivatives taken term-by-term.

    Each series term (x/2)^(2r+nu/k)-proportional piece differentiates to
    multipliers (2r+b)/x and (2r+b)(2r+b-1)/x^2 with b = nu/k, so the three
    sums share one term recurrence; no finite differencing is involved.
    """
    if not x > 0.0:
        raise DomainError(f"eval_w_with_derivatives requires x > 0, got {x}")
    t0 = _leading_term(p, x)
    b = p.nu / p.k
    if p.c == 0.0:
        d1 = t0 * b / x
        d2 = t0 * b * (b - 1.0) / (x * x)
        return EvalResult(t0, 1, 0.0), d1, d2
    xh = 0.5 * x
    qhi, qlo = two_prod(xh, xh)
    qhi, qlo = dd_mul_d(qhi, qlo, -p.c)

    s0h = s0l = s1h = s1l = s2h = s2l = 0.0
    thi, tlo = t0, 0.0
    inv_x = 1.0 / x
    inv_x2 = inv_x * inv_x
    streak = 0
    r = 0
    while True:
        m = 2.0 * r + b
        m1 = m * inv_x
        m2 = m * (m - 1.0) * inv_x2
        s0h, s0l = dd_add(s0h, s0l, thi, tlo)
        g1h, g1l = dd_mul_d(thi, tlo, m1)
        s1h, s1l = dd_add(s1h, s1l, g1h, g1l)
        g2h, g2l = dd_mul_d(thi, tlo, m2)
        s2h, s2l = dd_add(s2h, s2l, g2h, g2l)

        phi, plo = two_prod(float(r), p.k)
        phi, plo = dd_add(phi, plo, p.nu, 0.0)
        phi, plo = dd_add(phi, plo, p.k, 0.0)
        dhi, dlo = dd_mul_d(phi, plo, float(r + 1))
        nhi, nlo = dd_mul(thi, tlo, qhi, qlo)
        nhi, nlo = dd_div(nhi, nlo, dhi, dlo)

        tiny = (abs(thi) <= cfg.rel_tol * abs(s0h)
                and abs(thi * m1) <= cfg.rel_tol * abs(s1h)
                and abs(thi * m2) <= cfg.rel_tol * abs(s2h))
        if tiny:
            streak += 1
            if streak >= 2:
                terms_used = r + 1
                ratio_next = abs(qhi) / ((r + 2) * ((r + 1) * p.k + p.nu + p.k))
                est = _tail_estimate(nhi, ratio_next, alternating=qhi < 0.0)
                return (EvalResult(s0h + s0l, terms_used, est),
                        s1h + s1l, s2h + s2l)
        else:
            streak = 0
        r += 1
        if r >= cfg.max_terms:
            raise NonConvergence(
                f"derivative series did not meet rel_tol={cfg.rel_tol} within "
                f"max_terms={cfg.max_terms}"
            )
        thi, tlo = nhi, nlo


def deriv_w_terms(p: KBesselParams, m: int) -> list[tuple[float, float]]:
    """Orders and weights of the m-th derivative ladder.

    d^m/dx^m W_nu = sum_n weight_n * W_(order_n) with
    order_n = nu + (2n - m)k and weight_n = (-1)^n C(m,n) c^n k^n / (2k)^m.
    Every order must itself satisfy order > -k, i.e. nu - m k > -k.
    """
    if not isinstance(m, int) or m < 1:
        raise InvalidParameter(f"derivative order m must be an integer >= 1, got {m!r}")
    if not p.nu - m * p.k > -p.k:
        raise InvalidParameter(
            f"derivative ladder needs nu - m*k > -k; got nu={p.nu}, m={m}, k={p.k}"
        )
    scale = (2.0 * p.k) ** m
    out = []
    for n in range(m + 1):
        weight = ((-1.0) ** n) * math.comb(m, n) * (p.c ** n) * (p.k ** n) / scale
        out.append((p.nu + (2 * n - m) * p.k, weight))
    return out


def deriv_w(p: KBesselParams, x: float, m: int,
            cfg: SeriesConfig = _DEFAULT_CONFIG) -> EvalResult:
    """m-th derivative of W at x via the order ladder (m >= 1)."""
    parts = deriv_w_terms(p, m)
    total = 0.0
    est = 0.0
    terms_used = 0
    vals = []
    for order, weight in parts:
        res = eval_w(KBesselParams(p.k, order, p.c), x, cfg)
        vals.append(weight * res.value)
        est += abs(weight) * res.est_error
        terms_used = max(terms_used, res.terms_used)
    total = math.fsum(vals)
    return EvalResult(total, terms_used, est)


def recurrence_step_up(p: KBesselParams, x: float, w_nu: float,
                       w_nu_minus_k: float) -> float:
    """Solve the three-term order recurrence upward:

    W_(nu+k) = (2 nu W_nu / x - W_(nu-k)) / (c k);  needs nu > 0, c != 0, x > 0.
    """
    if p.c == 0.0:
        raise InvalidParameter("recurrence_step_up requires c != 0")
    if not p.nu > 0.0:
        raise InvalidParameter(f"recurrence_step_up requires nu > 0, got {p.nu}")
    if not x > 0.0:
        raise DomainError(f"recurrence_step_up requires x > 0, got {x}")
    return (2.0 * p.nu * w_nu / x - w_nu_minus_k) / (p.c * p.k)


def multisection_lhs(p: KBesselParams, x: float, terms: int,
                     cfg: SeriesConfig = _DEFAULT_CONFIG) -> EvalResult:
    """Truncated multisection sum

        (2/x) * sum_{r=0}^{terms-1} (-c k)^r (nu + 2 r k) W_(nu + 2 r k)(x),

    which converges to W_(nu-k)(x); telescoping the three-term order
    recurrence produces one factor -c k per step, so the classical
    alternating (-1)^r multisection is the c = k = 1 slice.  est_error is the
    magnitude of the first omitted term; if the omitted term has not started
    decreasing by the cap, NonConvergence is raised.
    """
    if not isinstance(terms, int) or terms < 1:
        raise InvalidParameter(f"terms must be an integer >= 1, got {terms!r}")
    if not x > 0.0:
        raise DomainError(f"multisection_lhs requires x > 0, got {x}")
    two_over_x = 2.0 / x
    step = -p.c * p.k
    factor = 1.0
    pieces = []
    last_mag = math.inf
    for r in range(terms):
        order = p.nu + 2 * r * p.k
        w = eval_w(KBesselParams(p.k, order, p.c), x, cfg).value
        piece = factor * order * w * two_over_x
        pieces.append(piece)
        last_mag = abs(piece)
        factor *= step
    omit_order = p.nu + 2 * terms * p.k
    omit_w = eval_w(KBesselParams(p.k, omit_order, p.c), x, cfg).value
    omitted = abs(factor * omit_order * omit_w * two_over_x)
    if omitted >= last_mag:
        raise NonConvergence(
            f"multisection terms not yet decreasing after {terms} terms "
            f"(|omitted| = {omitted:.3e} >= |last| = {last_mag:.3e})"
        )
    return EvalResult(math.fsum(pieces), terms, omitted)
