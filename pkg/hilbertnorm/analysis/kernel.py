"""
Auxiliary Kernels
Generalized binomials, the weight psi, the functions H, K, G, F and the
pair E~ / G~ whose sign structure locates the critical points p0..p3.

Closed forms are the evaluators; the *_series functions exist only as
independent cross-checks.

Notation:
    a = (2 + alpha) / p          exponent of psi
    b = (p - 2 alpha - 2) / 2    first Beta shape of H and K
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from ..errors import BracketNotFound, DomainError
from ..special.quadrature import (
    QuadConfig,
    QuadResult,
    SingularWeight,
    integrate,
    integrate_singular,
    integrate_weighted,
)
from ..special.specfun import beta, inc_beta, inc_beta_scaled

logger = logging.getLogger(__name__)

SERIES_EPS = 1e-15
SERIES_MAX_TERMS = 100_000
BISECTION_TOL = 1e-10


# ============================================================================
# Parameters and regimes
# ============================================================================

@dataclass(frozen=True)
class WeightedSpace:
    """The space A^p_alpha: alpha >= 0, p >= 1."""
    alpha: float
    p: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha >= 0.0):
            raise DomainError(f"alpha must be finite and >= 0, got {self.alpha}")
        if not (math.isfinite(self.p) and self.p >= 1.0):
            raise DomainError(f"p must be finite and >= 1, got {self.p}")


@dataclass(frozen=True)
class Params(WeightedSpace):
    """(alpha, p) under the standing assumption p > 2 + alpha."""

    def __post_init__(self):
        super().__post_init__()
        if not self.p > 2.0 + self.alpha:
            raise DomainError(
                f"p must exceed 2 + alpha (alpha={self.alpha}, p={self.p})",
                {'alpha': self.alpha, 'p': self.p},
            )

    @property
    def a(self) -> float:
        return (2.0 + self.alpha) / self.p

    @property
    def b(self) -> float:
        return (self.p - 2.0 * self.alpha - 2.0) / 2.0

    @property
    def c(self) -> float:
        """2p - 4 alpha - 4."""
        return 2.0 * self.p - 4.0 * self.alpha - 4.0

    @property
    def psi_mass(self) -> float:
        """B(a, 1-a), the integral of psi over (0, 1)."""
        return beta(self.a, 1.0 - self.a)


class RegimeTag(str, Enum):
    """Parameter ranges of the norm conjecture."""
    BelowConjecture = 'below_conjecture'
    RegimeB = 'regime_b'
    RegimeA = 'regime_a'
    KnownLargeP = 'known_large_p'


@dataclass(frozen=True)
class Regime:
    """Regime tag plus the alpha-dependent threshold t_star."""
    tag: RegimeTag
    t_star: float


def t_star(alpha: float) -> float:
    """2 + alpha + sqrt(alpha^2 + 7/2 alpha + 3)."""
    return 2.0 + alpha + math.sqrt(alpha * alpha + 3.5 * alpha + 3.0)


def regime_of(params: Params) -> Regime:
    """
    Classify (alpha, p)

    Returns:
        Regime with tag BelowConjecture (p <= 2+2a), RegimeB (< t_star),
        RegimeA (< 2(2+alpha)) or KnownLargeP
    """
    alpha, p = params.alpha, params.p
    ts = t_star(alpha)
    if p <= 2.0 + 2.0 * alpha:
        tag = RegimeTag.BelowConjecture
    elif p < ts:
        tag = RegimeTag.RegimeB
    elif p < 2.0 * (2.0 + alpha):
        tag = RegimeTag.RegimeA
    else:
        tag = RegimeTag.KnownLargeP
    return Regime(tag=tag, t_star=ts)


def _require_above_diagonal(params: Params) -> None:
    if not params.p > 2.0 + 2.0 * params.alpha:
        raise DomainError(
            f"requires p > 2 + 2 alpha (alpha={params.alpha}, p={params.p})",
            {'alpha': params.alpha, 'p': params.p},
        )


def _require_regime_b(params: Params) -> None:
    tag = regime_of(params).tag
    if tag != RegimeTag.RegimeB:
        raise DomainError(
            f"requires RegimeB, got {tag.name} (alpha={params.alpha}, p={params.p})",
            {'alpha': params.alpha, 'p': params.p, 'regime': tag.value},
        )


def _require_closed_unit(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {value}")


# ============================================================================
# Series helpers
# ============================================================================

def gen_binom(alpha: float, k: int) -> float:
    """
    Generalized binomial coefficient alpha (alpha-1) ... (alpha-k+1) / k!

    Args:
        alpha: Real upper argument
        k: Non-negative integer

    Returns:
        binom(alpha, k); 1 for k = 0
    """
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    value = 1.0
    for j in range(k):
        value *= (alpha - j) / (j + 1)
    return value


def _alternating_binomial_sum(alpha: float, term: Callable[[int], float]) -> float:
    """Sum binom(alpha, k) (-1)^k term(k) with the package stopping rule."""
    total = 0.0
    coeff = 1.0
    for k in range(SERIES_MAX_TERMS):
        value = coeff * term(k)
        total += value
        if k > 0 and abs(value) <= SERIES_EPS * abs(total):
            break
        coeff *= -(alpha - k) / (k + 1)
    else:
        logger.debug("series hit the %d-term cap", SERIES_MAX_TERMS)
    return total


# ============================================================================
# psi, H, K, G
# ============================================================================

def psi(params: Params, t: float) -> float:
    """
    psi(t) = t^(a-1) (1-t)^(-a)

    Raises:
        DomainError: t outside (0, 1)
    """
    if not 0.0 < t < 1.0:
        raise DomainError(f"psi is singular at t={t}; requires 0 < t < 1")
    a = params.a
    return t ** (a - 1.0) * (1.0 - t) ** (-a)


def psi_weight(params: Params) -> SingularWeight:
    """psi as a quadrature weight (left exponent a, right exponent a)."""
    return SingularWeight(params.a, params.a)


def h_fun(params: Params, s: float) -> float:
    """
    H(s) = B(b, alpha+1)/2 - (1 - s^4)^(alpha+1) / (2 (alpha+1))

    Args:
        params: (alpha, p) with p > 2 + 2 alpha
        s: Point in [0, 1]
    """
    _require_above_diagonal(params)
    _require_closed_unit('s', s)
    y = params.alpha + 1.0
    return 0.5 * beta(params.b, y) - (1.0 - s ** 4) ** y / (2.0 * y)


def h_series(params: Params, s: float) -> float:
    """Series form of H: sum binom(alpha,k)(-1)^k [1/(p-2a-2+2k) - (1 - s^(4k+4))/(2k+2)]."""
    _require_above_diagonal(params)
    _require_closed_unit('s', s)
    base = params.p - 2.0 * params.alpha - 2.0
    s4 = s ** 4
    return _alternating_binomial_sum(
        params.alpha,
        lambda k: 1.0 / (base + 2.0 * k) - (1.0 - s4 ** (k + 1)) / (2.0 * k + 2.0),
    )


def k_fun(params: Params, s: float, t: float) -> float:
    """
    K(s, t) = B_{m^4}(b, alpha+1) / 2 with m = max(s, t)

    Args:
        params: (alpha, p) with p > 2 + 2 alpha
        s: Point in [0, 1]
        t: Point in [0, 1]
    """
    _require_above_diagonal(params)
    _require_closed_unit('s', s)
    _require_closed_unit('t', t)
    m = max(s, t)
    return 0.5 * inc_beta(m ** 4, params.b, params.alpha + 1.0)


def k_series(params: Params, s: float, t: float) -> float:
    """Series form of K: sum binom(alpha,k)(-1)^k m^(2(p-2a-2+2k)) / (p-2a-2+2k)."""
    _require_above_diagonal(params)
    _require_closed_unit('s', s)
    _require_closed_unit('t', t)
    base = params.p - 2.0 * params.alpha - 2.0
    m2 = max(s, t) ** 2
    return _alternating_binomial_sum(
        params.alpha,
        lambda k: m2 ** (base + 2.0 * k) / (base + 2.0 * k),
    )


def g_fun(params: Params, s: float) -> float:
    """
    G(s) = s^(2(p-2 alpha-2)-1) (1 - s^4)^alpha

    Args:
        params: (alpha, p)
        s: Point in (0, 1]
    """
    if not 0.0 < s <= 1.0:
        raise DomainError(f"s must lie in (0, 1], got {s}")
    if s == 1.0:
        return 1.0 if params.alpha == 0.0 else 0.0
    exponent = 2.0 * (params.p - 2.0 * params.alpha - 2.0) - 1.0
    return s ** exponent * (1.0 - s ** 4) ** params.alpha


def g_series(params: Params, s: float) -> float:
    """Series form of G: sum binom(alpha,k)(-1)^k s^(2(p-2 alpha-2+2k)-1)."""
    if not 0.0 < s <= 1.0:
        raise DomainError(f"s must lie in (0, 1], got {s}")
    base = params.p - 2.0 * params.alpha - 2.0
    return _alternating_binomial_sum(
        params.alpha,
        lambda k: s ** (2.0 * (base + 2.0 * k) - 1.0),
    )


# ============================================================================
# F and its derivative
# ============================================================================

def psi_beta_tail(params: Params, s: float, cfg: QuadConfig) -> QuadResult:
    """
    Integral over [s, 1] of psi(t) B_{t^4}(b, alpha+1) dt

    On [max(s, 1/2), 1] the identity B_{t^4}(b, y) = B(b, y) - B_{1-t^4}(y, b)
    turns the integral into a psi-moment (closed form) minus a smooth
    integrand carrying the weight (1-t)^(y-a). Near 0 the factor t^(4b) is
    moved into the weight.
    """
    _require_above_diagonal(params)
    _require_closed_unit('s', s)
    if s == 1.0:
        return QuadResult(0.0, 0.0)

    a, b = params.a, params.b
    y = params.alpha + 1.0
    total = 0.0
    error = 0.0

    mid = max(s, 0.5)
    if s < 0.5:
        if s == 0.0:
            head = integrate_weighted(
                lambda t: (1.0 - t) ** (-a) * inc_beta_scaled(t ** 4, b, y),
                0.0, 0.5, a - 1.0 + 4.0 * b, 0.0, cfg,
            )
        else:
            head = integrate(
                lambda t: psi(params, t) * inc_beta(t ** 4, b, y), s, 0.5, cfg,
            )
        total += head.value
        error += head.error

    total += beta(b, y) * (params.psi_mass - inc_beta(mid, a, 1.0 - a))
    correction = integrate_weighted(
        lambda t: t ** (a - 1.0) * ((1.0 + t) * (1.0 + t * t)) ** y
        * inc_beta_scaled(1.0 - t ** 4, y, b),
        mid, 1.0, 0.0, y - a, cfg,
    )
    total -= correction.value
    error += correction.error
    return QuadResult(total, error)


def big_f_with_error(params: Params, s: float, cfg: QuadConfig) -> QuadResult:
    """F(s) with the quadrature error estimate."""
    _require_above_diagonal(params)
    _require_closed_unit('s', s)
    a, b = params.a, params.b
    y = params.alpha + 1.0
    # t < s: K(s, t) is constant in t
    inner = 0.5 * inc_beta(s ** 4, b, y) * inc_beta(s, a, 1.0 - a)
    tail = psi_beta_tail(params, s, cfg)
    value = params.psi_mass * h_fun(params, s) - inner - 0.5 * tail.value
    return QuadResult(value, 0.5 * tail.error)


def big_f(params: Params, s: float, cfg: QuadConfig) -> float:
    """
    F(s) = B(a, 1-a) H(s) - integral_0^1 psi(t) K(s, t) dt

    Args:
        params: (alpha, p) with p > 2 + 2 alpha
        s: Point in [0, 1]
        cfg: Quadrature tolerances

    Returns:
        F(s); F(1) = 0
    """
    return big_f_with_error(params, s, cfg).value


def big_f_derivative(params: Params, s: float, cfg: QuadConfig) -> float:
    """
    F'(s) = 2 s^(2p-4 alpha-5) (1 - s^4)^alpha G~(s)

    At s = 0 the limit is returned: 0 when 2p - 4 alpha - 5 + a > 0.
    """
    _require_above_diagonal(params)
    _require_closed_unit('s', s)
    exponent = 2.0 * params.p - 4.0 * params.alpha - 5.0
    if s == 0.0:
        order = exponent + params.a
        if order > 0.0:
            return 0.0
        if order == 0.0:
            return -2.0 / params.a
        raise DomainError(f"F' is unbounded at 0 (order {order:.4g})")
    if s == 1.0:
        return 0.0 if params.alpha > 0.0 else 2.0 * _g_tilde(params, 1.0, cfg)
    return 2.0 * s ** exponent * (1.0 - s ** 4) ** params.alpha * _g_tilde(params, s, cfg)


# ============================================================================
# E~, G~ and the critical points
# ============================================================================

def _tilde_exponent(params: Params) -> float:
    """8 + 4 alpha - 2p."""
    return 8.0 + 4.0 * params.alpha - 2.0 * params.p


def _g_tilde(params: Params, s: float, cfg: QuadConfig) -> float:
    if s == 0.0:
        return 0.0
    partial = integrate_singular(lambda t: 1.0, psi_weight(params), cfg, upper=s)
    return s ** _tilde_exponent(params) * params.psi_mass - partial.value


def g_tilde(params: Params, s: float, cfg: QuadConfig) -> float:
    """
    G~(s) = s^(8+4 alpha-2p) B(a, 1-a) - integral_0^s psi(t) dt

    Args:
        params: (alpha, p) in RegimeB
        s: Point in [0, 1]
        cfg: Quadrature tolerances

    Returns:
        G~(s); vanishes at both ends
    """
    _require_regime_b(params)
    _require_closed_unit('s', s)
    return _g_tilde(params, s, cfg)


def e_tilde_constant(params: Params) -> float:
    """1 / ((8+4 alpha-2p) B(a, 1-a)), the value subtracted in E~."""
    return 1.0 / (_tilde_exponent(params) * params.psi_mass)


def e_tilde(params: Params, s: float) -> float:
    """
    E~(s) = (1-s)^a s^(8+4 alpha-2p-a) - 1/((8+4 alpha-2p) B(a, 1-a))

    Args:
        params: (alpha, p) in RegimeB
        s: Point in [0, 1]

    Returns:
        E~(s); equal to the negative constant at s = 0 and s = 1
    """
    _require_regime_b(params)
    _require_closed_unit('s', s)
    constant = e_tilde_constant(params)
    if s in (0.0, 1.0):
        return -constant
    m = _tilde_exponent(params) - params.a
    return (1.0 - s) ** params.a * s ** m - constant


def critical_p0(params: Params) -> float:
    """p0 = (8+4 alpha-2p-a) / (8+4 alpha-2p), the maximiser of E~."""
    _require_regime_b(params)
    e = _tilde_exponent(params)
    return (e - params.a) / e


@dataclass(frozen=True)
class CriticalPoints:
    """Sign changes p1 < p0 < p2 of E~ and the zero p3 of G~ in (p1, p2)."""
    p0: float
    p1: Optional[float] = None
    p2: Optional[float] = None
    p3: Optional[float] = None

    def __post_init__(self):
        if not 0.0 < self.p0 < 1.0:
            raise DomainError(f"p0 must lie in (0, 1), got {self.p0}")
        if self.p1 is not None and self.p2 is not None:
            if not 0.0 < self.p1 < self.p0 < self.p2 < 1.0:
                raise DomainError("critical points violate 0 < p1 < p0 < p2 < 1")
            if self.p3 is not None and not self.p1 < self.p3 < self.p2:
                raise DomainError("critical points violate p1 < p3 < p2")


def bisect_sign_change(fn: Callable[[float], float], lo: float, hi: float,
                       tol: float = BISECTION_TOL) -> float:
    """
    Bisection for a sign change of fn on [lo, hi]

    Raises:
        BracketNotFound: fn(lo) and fn(hi) share a sign
    """
    f_lo = fn(lo)
    f_hi = fn(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise BracketNotFound(
            f"no sign change on [{lo}, {hi}] (f(lo)={f_lo:.3g}, f(hi)={f_hi:.3g})",
            {'lo': lo, 'hi': hi, 'f_lo': f_lo, 'f_hi': f_hi},
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = fn(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def locate_critical_points(params: Params, cfg: QuadConfig) -> CriticalPoints:
    """
    Bracket p1 in (0, p0), p2 in (p0, 1) for E~ and p3 in (p1, p2) for G~

    Args:
        params: (alpha, p) in RegimeB
        cfg: Quadrature tolerances for G~

    Returns:
        CriticalPoints with all four points

    Raises:
        BracketNotFound: E~(p0) <= 0 or G~ keeps its sign on (p1, p2)
    """
    p0 = critical_p0(params)
    peak = e_tilde(params, p0)
    if peak <= 0.0:
        raise BracketNotFound(
            f"E~(p0) = {peak:.3g} <= 0 (alpha={params.alpha}, p={params.p})",
            {'p0': p0, 'e_tilde_p0': peak},
        )

    def e_fn(s: float) -> float:
        return e_tilde(params, s)

    p1 = bisect_sign_change(e_fn, 0.0, p0)
    p2 = bisect_sign_change(e_fn, p0, 1.0)
    p3 = bisect_sign_change(lambda s: _g_tilde(params, s, cfg), p1, p2)
    logger.debug("critical points alpha=%s p=%s: p1=%.12f p0=%.12f p2=%.12f p3=%.12f",
                 params.alpha, params.p, p1, p0, p2, p3)
    return CriticalPoints(p0=p0, p1=p1, p2=p2, p3=p3)
