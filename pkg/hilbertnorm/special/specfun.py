"""
Special Functions
Real-argument log-Gamma, Beta, incomplete and regularized incomplete Beta,
plus the two-sided elementary Beta bounds.

All functions are pure and raise DomainError for inputs outside their
domain instead of returning NaN.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..errors import DomainError, NonConvergence, RegimeMismatch

logger = logging.getLogger(__name__)


# ============================================================================
# Log-Gamma (Lanczos, g = 7, n = 9)
# ============================================================================

LANCZOS_G = 7.0
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# Cross-check table: (x, ln Gamma(x)) from closed forms
LN_GAMMA_TABLE = (
    (0.5, 0.5 * math.log(math.pi)),
    (1.0, 0.0),
    (2.0, 0.0),
    (5.0, math.log(24.0)),
    (10.0, math.log(362880.0)),
)

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _is_real(value) -> bool:
    if isinstance(value, (bool, complex)):
        return False
    try:
        float(value)
    except (TypeError, ValueError):
        return False
    return True


def _require_positive(name: str, value: float) -> None:
    if not _is_real(value) or not math.isfinite(value) or value <= 0:
        raise DomainError(f"{name} must be a finite positive real, got {value!r}",
                          {name: value})


def _require_unit(name: str, value: float) -> None:
    if not _is_real(value) or not math.isfinite(value) or not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {value!r}", {name: value})


def ln_gamma(x: float) -> float:
    """
    Natural log of the Gamma function for x > 0

    Uses the reflection formula below 1/2 and the Lanczos series above.

    Args:
        x: Positive finite real

    Returns:
        ln Gamma(x)
    """
    _require_positive('x', x)
    x = float(x)
    if x < 0.5:
        return math.log(math.pi / math.sin(math.pi * x)) - ln_gamma(1.0 - x)

    x -= 1.0
    acc = LANCZOS_COEFFS[0]
    for i in range(1, len(LANCZOS_COEFFS)):
        acc += LANCZOS_COEFFS[i] / (x + i)
    t = x + LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (x + 0.5) * math.log(t) - t + math.log(acc)


def beta(x: float, y: float) -> float:
    """
    Complete Beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y)

    Args:
        x: Positive real
        y: Positive real

    Returns:
        B(x, y)
    """
    _require_positive('x', x)
    _require_positive('y', y)
    return math.exp(ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y))


# ============================================================================
# Incomplete Beta
# ============================================================================

CF_EPS = 1e-15
CF_FPMIN = 1e-300
CF_MAXIT = 10000
SERIES_CUTOFF = 1e-2


def _beta_cf(t: float, x: float, y: float) -> float:
    """Continued fraction for B_t(x,y), modified Lentz (Numerical Recipes betacf)."""
    qab = x + y
    qap = x + 1.0
    qam = x - 1.0
    c = 1.0
    d = 1.0 - qab * t / qap
    if abs(d) < CF_FPMIN:
        d = CF_FPMIN
    d = 1.0 / d
    h = d

    for m in range(1, CF_MAXIT + 1):
        m2 = 2 * m
        # even step
        aa = m * (y - m) * t / ((qam + m2) * (x + m2))
        d = 1.0 + aa * d
        if abs(d) < CF_FPMIN:
            d = CF_FPMIN
        c = 1.0 + aa / c
        if abs(c) < CF_FPMIN:
            c = CF_FPMIN
        d = 1.0 / d
        h *= d * c
        # odd step
        aa = -(x + m) * (qab + m) * t / ((x + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < CF_FPMIN:
            d = CF_FPMIN
        c = 1.0 + aa / c
        if abs(c) < CF_FPMIN:
            c = CF_FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < CF_EPS:
            return h

    raise NonConvergence(
        f"Incomplete Beta continued fraction did not converge (t={t}, x={x}, y={y})",
        estimate=h, error=abs(delta - 1.0),
    )


def _beta_series(t: float, x: float, y: float) -> float:
    """Sum of (1-y)_n t^n / (n! (x+n)); B_t(x,y) = t^x times this."""
    total = 1.0 / x
    term = 1.0
    for n in range(1, CF_MAXIT):
        term *= (n - y) * t / n
        contrib = term / (x + n)
        total += contrib
        if abs(contrib) < CF_EPS * abs(total):
            return total
    raise NonConvergence(
        f"Incomplete Beta series did not converge (t={t}, x={x}, y={y})",
        estimate=total, error=abs(contrib),
    )


def _use_series(t: float, y: float) -> bool:
    return t < SERIES_CUTOFF and t * max(1.0, y) < 0.1


def _lower_tail_scaled(t: float, x: float, y: float) -> float:
    """B_t(x,y) / t^x for t below the symmetry switch."""
    if _use_series(t, y):
        return _beta_series(t, x, y)
    return math.exp(y * math.log1p(-t)) * _beta_cf(t, x, y) / x


def _below_switch(t: float, x: float, y: float) -> bool:
    return t < (x + 1.0) / (x + y + 2.0)


def inc_beta(t: float, x: float, y: float) -> float:
    """
    Incomplete Beta function B_t(x, y) = integral_0^t s^(x-1) (1-s)^(y-1) ds

    Below the switch point (x+1)/(x+y+2) the continued fraction is used
    directly (series for tiny t); above it, B(x,y) - B_{1-t}(y,x).

    Args:
        t: Upper limit in [0, 1]
        x: Positive real
        y: Positive real

    Returns:
        B_t(x, y); exactly 0 at t = 0 and B(x, y) at t = 1
    """
    _require_unit('t', t)
    _require_positive('x', x)
    _require_positive('y', y)
    if t == 0.0:
        return 0.0
    if t == 1.0:
        return beta(x, y)

    if _below_switch(t, x, y):
        return math.exp(x * math.log(t)) * _lower_tail_scaled(t, x, y)

    s = 1.0 - t
    upper = math.exp(y * math.log(s)) * _lower_tail_scaled(s, y, x)
    return beta(x, y) - upper


def inc_beta_scaled(t: float, x: float, y: float) -> float:
    """
    B_t(x, y) / t^x, continuous at t = 0 where it equals 1/x

    Args:
        t: Point in [0, 1]
        x: Positive real
        y: Positive real

    Returns:
        Scaled incomplete Beta value
    """
    _require_unit('t', t)
    _require_positive('x', x)
    _require_positive('y', y)
    if t == 0.0:
        return 1.0 / x
    if _below_switch(t, x, y):
        return _lower_tail_scaled(t, x, y)
    return inc_beta(t, x, y) / t ** x


def reg_inc_beta(t: float, x: float, y: float) -> float:
    """
    Regularized incomplete Beta I_t(x, y) = B_t(x, y) / B(x, y)

    Args:
        t: Point in [0, 1]
        x: Positive real
        y: Positive real

    Returns:
        I_t(x, y) clamped to [0, 1]
    """
    value = inc_beta(t, x, y) / beta(x, y)
    return min(1.0, max(0.0, value))


# ============================================================================
# Elementary two-sided bounds
# ============================================================================

class BoundDomain(str, Enum):
    """Domains on which the elementary Beta bounds hold."""
    XGeOne_YLeOne = 'x_ge_one_y_le_one'
    BothInUnit = 'both_in_unit'


@dataclass(frozen=True)
class BetaArgs:
    """Validated positive argument pair for the Beta family."""
    x: float
    y: float

    def __post_init__(self):
        _require_positive('x', self.x)
        _require_positive('y', self.y)


def in_bound_domain(x: float, y: float, regime: BoundDomain) -> bool:
    """Whether (x, y) satisfies the hypotheses of `regime`."""
    if regime == BoundDomain.XGeOne_YLeOne:
        return x >= 1.0 and 0.0 < y <= 1.0
    return 0.0 < x <= 1.0 and 0.0 < y <= 1.0


def bound_domain_of(x: float, y: float) -> Optional[BoundDomain]:
    """
    Classify (x, y) into a bound domain

    Returns:
        XGeOne_YLeOne when x >= 1, BothInUnit when x < 1, None when y > 1
    """
    args = BetaArgs(x, y)
    for regime in (BoundDomain.XGeOne_YLeOne, BoundDomain.BothInUnit):
        if in_bound_domain(args.x, args.y, regime):
            return regime
    return None


def _check_regime(x: float, y: float, regime: BoundDomain) -> None:
    BetaArgs(x, y)
    if not in_bound_domain(x, y, regime):
        raise RegimeMismatch(
            f"(x={x}, y={y}) does not satisfy {regime.name}",
            {'x': x, 'y': y, 'regime': regime.value},
        )


def beta_upper_bound(x: float, y: float, regime: BoundDomain) -> float:
    """
    1/x + 1/y - 1

    In XGeOne_YLeOne this is >= B(x, y); in BothInUnit the inequality
    reverses and it is <= B(x, y).

    Raises:
        RegimeMismatch: (x, y) outside `regime`
    """
    _check_regime(x, y, regime)
    return 1.0 / x + 1.0 / y - 1.0


def beta_lower_bound(x: float, y: float, regime: BoundDomain) -> float:
    """
    (1/(x y)) (x + y) / (1 + x y)

    In XGeOne_YLeOne this is <= B(x, y); in BothInUnit it is >= B(x, y).

    Raises:
        RegimeMismatch: (x, y) outside `regime`
    """
    _check_regime(x, y, regime)
    return (x + y) / (x * y * (1.0 + x * y))
