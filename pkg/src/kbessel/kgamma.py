"""The k-deformed gamma family: Gamma_k, its log, psi_k, psi_k', B_k and
the k-Pochhammer symbol.

Everything is routed through the scaling reduction

    Gamma_k(t) = k^(t/k - 1) * Gamma(t/k),

so log-space evaluation is exact wherever ``classical.ln_gamma`` is, and

    psi_k(t)  = log(k)/k + psi(t/k)/k,
    psi_k'(t) = psi'(t/k)/k^2,

which the tests confirm against direct summation of the defining series.
Parameters named ``k`` must be positive everywhere; ``InvalidParameter`` is
raised otherwise, while out-of-domain evaluation points raise
``DomainError``.
"""

from __future__ import annotations

import math

from .classical import digamma, ln_gamma, trigamma
from .errors import DomainError, InvalidParameter, Overflow

# exp() overflows past this; used to report Overflow instead of raising OverflowError
_MAX_EXP_ARG = 709.782712893384


def _require_k(k: float) -> None:
    if not k > 0.0:
        raise InvalidParameter(f"k must be positive, got {k}")


def k_pochhammer(x: float, n: int, k: float) -> float:
    """(x)_{n,k} = x (x+k) (x+2k) ... (x+(n-1)k); empty product for n = 0."""
    _require_k(k)
    if not isinstance(n, int) or n < 0:
        raise InvalidParameter(f"n must be a non-negative integer, got {n!r}")
    result = 1.0
    for j in range(n):
        result *= x + j * k
    if math.isinf(result):
        raise Overflow(f"k_pochhammer({x}, {n}, {k}) exceeds double range")
    return result


def ln_k_gamma(t: float, k: float) -> float:
    """log Gamma_k(t) for t > 0."""
    _require_k(k)
    if not t > 0.0:
        raise DomainError(f"ln_k_gamma requires t > 0, got {t}")
    return (t / k - 1.0) * math.log(k) + ln_gamma(t / k)


def k_gamma(t: float, k: float) -> float:
    """Gamma_k(t) for t > -k, t != 0 (one functional-equation step below 0)."""
    _require_k(k)
    if t > 0.0:
        v = ln_k_gamma(t, k)
        if v > _MAX_EXP_ARG:
            raise Overflow(f"Gamma_k({t}, {k}) exceeds double range")
        return math.exp(v)
    if t == 0.0 or t <= -k:
        raise DomainError(f"k_gamma requires t > -k and t != 0, got t={t}, k={k}")
    # -k < t < 0: Gamma_k(t) = Gamma_k(t + k) / t
    return k_gamma(t + k, k) / t


def k_digamma(t: float, k: float) -> float:
    """psi_k(t), the log-derivative of Gamma_k, for t > 0."""
    _require_k(k)
    if not t > 0.0:
        raise DomainError(f"k_digamma requires t > 0, got {t}")
    return (math.log(k) + digamma(t / k)) / k


def k_trigamma(t: float, k: float) -> float:
    """psi_k'(t) = sum_{n>=0} 1/(nk+t)^2, for t > 0."""
    _require_k(k)
    if not t > 0.0:
        raise DomainError(f"k_trigamma requires t > 0, got {t}")
    return trigamma(t / k) / (k * k)


def k_beta(x: float, y: float, k: float) -> float:
    """B_k(x, y) = Gamma_k(x) Gamma_k(y) / Gamma_k(x+y), for x, y > 0."""
    _require_k(k)
    if not (x > 0.0 and y > 0.0):
        raise DomainError(f"k_beta requires x > 0 and y > 0, got x={x}, y={y}")
    return math.exp(ln_k_gamma(x, k) + ln_k_gamma(y, k) - ln_k_gamma(x + y, k))
