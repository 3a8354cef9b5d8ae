"""
Integral Conditions
The three equivalent forms (a), (b), (c) of the sufficient condition for
the norm formula, the three-Beta-term bound S(alpha, p), and the regime /
status classifier.

Forms (a) and (b) are computed along independent quadrature paths so that
their agreement is a real check:
    (a) = F(0) through kernel.big_f (closed-form psi moments + weighted tail)
    (b) direct psi-weighted integral of B_{t^4}(b, alpha+1)
    (c) integral of I_t(a, 1-a) t^(2p-4 alpha-5) (1-t^4)^alpha minus 1/(4(alpha+1))
and (a) = 2 B(a, 1-a) (c).
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from ..errors import DomainError, NonConvergence
from ..special.quadrature import QuadConfig, QuadResult, integrate_singular, integrate_weighted
from ..special.specfun import beta, inc_beta, inc_beta_scaled
from .kernel import (
    Params,
    Regime,
    RegimeTag,
    big_f_with_error,
    psi_weight,
    regime_of,
)

logger = logging.getLogger(__name__)

DEAD_BAND_FACTOR = 10.0

# (alpha, p_lo, p_hi): open p-ranges where neither sign of (c) is proven
UNRESOLVED_STRIPS: Tuple[Tuple[float, float, float], ...] = (
    (1.0, 5.1, 5.5),
)


# ============================================================================
# Types
# ============================================================================

class StatusTag(str, Enum):
    """Conjecture status of a parameter point."""
    ProvenRegimeA = 'proven_regime_a'
    RegimeB_ConditionHolds = 'regimeb_holds'
    RegimeB_ConditionFails = 'regimeb_fails'
    RegimeB_Indeterminate = 'regimeb_indeterminate'
    KnownLargeP = 'known_large_p'
    OutOfConjectureRange = 'out_of_range'


@dataclass(frozen=True)
class ConditionValues:
    """
    Values of the condition forms at one (alpha, p)

    a_value / b_value are None when only (c) was requested.
    """
    c_value: float
    c_error: float
    a_value: Optional[float] = None
    a_error: Optional[float] = None
    b_value: Optional[float] = None
    b_error: Optional[float] = None
    s_bound_value: Optional[float] = None


@dataclass(frozen=True)
class ConjectureStatus:
    """Regime, status and the condition values that decided it."""
    regime: Regime
    status: StatusTag
    values: Optional[ConditionValues] = None
    notes: List[str] = field(default_factory=list)

    @property
    def is_definite(self) -> bool:
        return self.status != StatusTag.RegimeB_Indeterminate


# ============================================================================
# Condition forms
# ============================================================================

def _require_conditions_domain(params: Params) -> None:
    if not params.p > 2.0 + 2.0 * params.alpha:
        raise DomainError(
            f"conditions require p > 2 + 2 alpha (alpha={params.alpha}, p={params.p})",
            {'alpha': params.alpha, 'p': params.p},
        )


def condition_a_with_error(params: Params, cfg: QuadConfig) -> QuadResult:
    """Form (a) = F(0) with its quadrature error."""
    _require_conditions_domain(params)
    return big_f_with_error(params, 0.0, cfg)


def condition_a(params: Params, cfg: QuadConfig) -> float:
    """
    Form (a): B(a, 1-a) H(0) - integral psi(t) K(0, t) dt

    Args:
        params: (alpha, p) in RegimeA or RegimeB
        cfg: Quadrature tolerances

    Returns:
        F(0); the condition holds when <= 0
    """
    return condition_a_with_error(params, cfg).value


def condition_b_with_error(params: Params, cfg: QuadConfig) -> QuadResult:
    """Form (b) with its quadrature error."""
    _require_conditions_domain(params)
    b = params.b
    y = params.alpha + 1.0
    bracket = 0.5 * beta(b, y) - 1.0 / (2.0 * y)
    moment = integrate_singular(
        lambda t: inc_beta(t ** 4, b, y),
        psi_weight(params), cfg, breakpoints=(0.5,),
    )
    value = params.psi_mass * bracket - 0.5 * moment.value
    return QuadResult(value, 0.5 * moment.error)


def condition_b(params: Params, cfg: QuadConfig) -> float:
    """
    Form (b): B(a,1-a) [B(b,alpha+1)/2 - 1/(2(alpha+1))] - 1/2 integral psi B_{t^4}(b, alpha+1)

    Args:
        params: (alpha, p) in RegimeA or RegimeB
        cfg: Quadrature tolerances
    """
    return condition_b_with_error(params, cfg).value


def condition_c_with_error(params: Params, cfg: QuadConfig) -> QuadResult:
    """
    Form (c) with its quadrature error

    [0, 1/2]: t^(a+e) is the weight and I_t / t^a is smooth.
    [1/2, 1]: I_t = 1 - I_{1-t}(1-a, a); each part carries its own
    power of (1 - t) as the weight.
    """
    _require_conditions_domain(params)
    a = params.a
    alpha = params.alpha
    e = 2.0 * params.p - 4.0 * alpha - 5.0
    mass = params.psi_mass

    def smooth_tail(t: float) -> float:
        # (1 - t^4)^alpha / (1 - t)^alpha
        return ((1.0 + t) * (1.0 + t * t)) ** alpha

    left = integrate_weighted(
        lambda t: inc_beta_scaled(t, a, 1.0 - a) / mass * (1.0 - t ** 4) ** alpha,
        0.0, 0.5, a + e, 0.0, cfg,
    )
    whole = integrate_weighted(
        lambda t: t ** e * smooth_tail(t),
        0.5, 1.0, 0.0, alpha, cfg,
    )
    complement = integrate_weighted(
        lambda t: t ** e * smooth_tail(t) * inc_beta_scaled(1.0 - t, 1.0 - a, a) / mass,
        0.5, 1.0, 0.0, alpha + 1.0 - a, cfg,
    )
    value = left.value + whole.value - complement.value - 1.0 / (4.0 * (alpha + 1.0))
    return QuadResult(value, left.error + whole.error + complement.error)


def condition_c(params: Params, cfg: QuadConfig) -> float:
    """
    Form (c): integral_0^1 I_t(a, 1-a) t^(2p-4 alpha-5) (1-t^4)^alpha dt - 1/(4(alpha+1))

    Args:
        params: (alpha, p) in RegimeA or RegimeB
        cfg: Quadrature tolerances
    """
    return condition_c_with_error(params, cfg).value


# ============================================================================
# Three-Beta-term bound
# ============================================================================

def s_bound_applies(alpha: float, p: float) -> bool:
    """alpha in [0,1] or [2,3], and 2+2 alpha < p < 2(2+alpha)."""
    alpha_ok = 0.0 <= alpha <= 1.0 or 2.0 <= alpha <= 3.0
    return alpha_ok and 2.0 + 2.0 * alpha < p < 2.0 * (2.0 + alpha)


def s_bound(params: Params) -> float:
    """
    S(alpha, p), the majorant of form (c) from the second-order bound
    (1-x)^alpha <= 1 - alpha x + alpha(alpha-1)/2 x^2

    With c = 2p - 4 alpha - 4 and a = (2+alpha)/p, each moment
    integral I_t t^(c_j - 1) dt equals 1/c_j - 1/(c_j^2 B(a, c_j)).

    Raises:
        DomainError: alpha outside [0,1] u [2,3] or p outside (2+2 alpha, 2(2+alpha))
    """
    alpha, p = params.alpha, params.p
    if not s_bound_applies(alpha, p):
        raise DomainError(
            f"S(alpha, p) requires alpha in [0,1] u [2,3] and 2+2alpha < p < 2(2+alpha) "
            f"(alpha={alpha}, p={p})",
            {'alpha': alpha, 'p': p},
        )
    a = params.a
    c = params.c

    def moment(cj: float) -> float:
        return 1.0 / cj - 1.0 / (cj * cj * beta(a, cj))

    return (moment(c)
            - alpha * moment(c + 4.0)
            + 0.5 * alpha * (alpha - 1.0) * moment(c + 8.0)
            - 1.0 / (4.0 * (alpha + 1.0)))


def alpha0_reduction(p: float) -> float:
    """
    B(2/p, 2p-4) - 1/((p-2)(4-p)) for 2 < p < 4

    Negative exactly when S(0, p) is negative.
    """
    if not 2.0 < p < 4.0:
        raise DomainError(f"alpha=0 reduction requires 2 < p < 4, got {p}")
    return beta(2.0 / p, 2.0 * p - 4.0) - 1.0 / ((p - 2.0) * (4.0 - p))


# ============================================================================
# Classification
# ============================================================================

def conjectured_norm(params: Params) -> float:
    """
    pi / sin((2 + alpha) pi / p)

    Raises:
        DomainError: (2 + alpha)/p not in (0, 1)
    """
    a = params.a
    if not 0.0 < a < 1.0:
        raise DomainError(f"(2+alpha)/p must lie in (0, 1), got {a}")
    return math.pi / math.sin(a * math.pi)


def in_unresolved_strip(params: Params) -> bool:
    """Whether (alpha, p) lies in a registered strip with no proof either way."""
    return any(
        abs(params.alpha - alpha) < 1e-12 and lo < params.p < hi
        for alpha, lo, hi in UNRESOLVED_STRIPS
    )


def evaluate_conditions(params: Params, cfg: QuadConfig, full: bool = True) -> ConditionValues:
    """
    Compute form (c), and with `full` also (a) and (b), plus S when defined

    Args:
        params: (alpha, p) with p > 2 + 2 alpha
        cfg: Quadrature tolerances
        full: Also evaluate forms (a) and (b)

    Returns:
        ConditionValues
    """
    c = condition_c_with_error(params, cfg)
    s_value = s_bound(params) if s_bound_applies(params.alpha, params.p) else None
    if not full:
        return ConditionValues(c_value=c.value, c_error=c.error, s_bound_value=s_value)
    a = condition_a_with_error(params, cfg)
    b = condition_b_with_error(params, cfg)
    return ConditionValues(
        c_value=c.value, c_error=c.error,
        a_value=a.value, a_error=a.error,
        b_value=b.value, b_error=b.error,
        s_bound_value=s_value,
    )


def _regime_b_status(params: Params, values: ConditionValues) -> Tuple[StatusTag, List[str]]:
    notes: List[str] = []
    value, error = values.c_value, values.c_error
    numeric = 'holds' if value <= 0.0 else 'fails'
    if in_unresolved_strip(params):
        notes.append(f"unresolved strip: numerically {numeric} "
                     f"(c = {value:.6g} +/- {error:.2g}), no proof either way")
        return StatusTag.RegimeB_Indeterminate, notes
    if abs(value) <= DEAD_BAND_FACTOR * error:
        notes.append(f"|c| = {abs(value):.3g} inside dead-band {DEAD_BAND_FACTOR:g} x {error:.3g}")
        return StatusTag.RegimeB_Indeterminate, notes
    if value <= 0.0:
        return StatusTag.RegimeB_ConditionHolds, notes
    return StatusTag.RegimeB_ConditionFails, notes


def classify(params: Params, cfg: QuadConfig, full: bool = False) -> ConjectureStatus:
    """
    Regime and conjecture status of (alpha, p)

    RegimeB points are decided by the sign of form (c) with a dead-band of
    DEAD_BAND_FACTOR times its error; points in UNRESOLVED_STRIPS are
    always indeterminate.

    Args:
        params: (alpha, p) with p > 2 + alpha
        cfg: Quadrature tolerances
        full: Evaluate forms (a) and (b) as well

    Returns:
        ConjectureStatus
    """
    regime = regime_of(params)
    tag = regime.tag
    if tag == RegimeTag.BelowConjecture:
        return ConjectureStatus(regime=regime, status=StatusTag.OutOfConjectureRange)
    if tag == RegimeTag.KnownLargeP:
        return ConjectureStatus(regime=regime, status=StatusTag.KnownLargeP)

    try:
        values = evaluate_conditions(params, cfg, full=full)
    except NonConvergence as exc:
        if tag != RegimeTag.RegimeB:
            raise
        logger.error("condition (c) did not converge at alpha=%s p=%s: %s",
                     params.alpha, params.p, exc)
        values = ConditionValues(c_value=exc.estimate, c_error=exc.error)

    if tag == RegimeTag.RegimeA:
        return ConjectureStatus(regime=regime, status=StatusTag.ProvenRegimeA, values=values)

    status, notes = _regime_b_status(params, values)
    return ConjectureStatus(regime=regime, status=status, values=values, notes=notes)


def status_counts(statuses: List[ConjectureStatus]) -> Dict[str, int]:
    """Histogram of status tags."""
    counts: Dict[str, int] = {}
    for item in statuses:
        counts[item.status.value] = counts.get(item.status.value, 0) + 1
    return counts
