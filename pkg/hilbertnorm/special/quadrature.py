"""
Quadrature
Adaptive 1-D integration on top of QUADPACK, with algebraic endpoint
weights for integrands carrying t^(a-1) (1-t)^(-b) singularities, plus
Gauss-Jacobi / Gauss-Legendre node tables for fixed-order rules.

The singular factor is always passed to QUADPACK as a weight, so the
improper part of an integrand is never evaluated at t = 0 or t = 1.
"""

import logging
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy import integrate as sp_integrate
from scipy import special as sp_special

from ..config import resolve_settings
from ..errors import DomainError, NonConvergence

logger = logging.getLogger(__name__)


# ============================================================================
# Configuration and result types
# ============================================================================

class QuadConfig(BaseModel):
    """Tolerances shared by every integral in the package."""
    model_config = ConfigDict(frozen=True)

    abs_tol: float = Field(1e-12, gt=0, description="Absolute error target")
    rel_tol: float = Field(1e-10, gt=0, description="Relative error target")
    max_subdivisions: int = Field(2000, ge=1, description="QUADPACK subinterval limit")

    def target(self, value: float) -> float:
        """Error the result must not exceed."""
        return max(self.abs_tol, self.rel_tol * abs(value))


def default_quad_config() -> QuadConfig:
    """QuadConfig from HNL_* environment settings."""
    settings = resolve_settings()
    return QuadConfig(
        abs_tol=settings['abs_tol'],
        rel_tol=settings['rel_tol'],
        max_subdivisions=settings['max_subdivisions'],
    )


class QuadResult(NamedTuple):
    """Integral value and its error estimate."""
    value: float
    error: float


@dataclass(frozen=True)
class SingularWeight:
    """Weight t^(a-1) (1-t)^(-b) on (0, 1)."""
    left_exponent: float
    right_exponent: float

    def __post_init__(self):
        if not 0.0 < self.left_exponent <= 1.0:
            raise DomainError(f"left exponent a must lie in (0, 1], got {self.left_exponent}")
        if not 0.0 <= self.right_exponent < 1.0:
            raise DomainError(f"right exponent b must lie in [0, 1), got {self.right_exponent}")

    def __call__(self, t: float) -> float:
        return t ** (self.left_exponent - 1.0) * (1.0 - t) ** (-self.right_exponent)


# ============================================================================
# Adaptive integration
# ============================================================================

def _finish(raw: Tuple, cfg: QuadConfig, what: str) -> QuadResult:
    value, error = float(raw[0]), float(raw[1])
    if len(raw) > 3:
        message = raw[3]
        if error > cfg.target(value):
            raise NonConvergence(
                f"{what}: {message}",
                estimate=value, error=error,
                details={'target': cfg.target(value)},
            )
        logger.warning("%s: QUADPACK flagged '%s' but error %.3g is within tolerance",
                       what, str(message).splitlines()[0], error)
    return QuadResult(value, error)


def integrate(f: Callable[[float], float], a: float, b: float,
              cfg: QuadConfig) -> QuadResult:
    """
    Adaptive Gauss-Kronrod integral of f over [a, b]

    Args:
        f: Integrand, finite on (a, b)
        a: Lower limit
        b: Upper limit (> a)
        cfg: Tolerances

    Returns:
        QuadResult(value, error)

    Raises:
        NonConvergence: error estimate above max(abs_tol, rel_tol*|value|)
    """
    if not a < b:
        raise DomainError(f"integrate requires a < b, got [{a}, {b}]")
    raw = sp_integrate.quad(
        f, a, b,
        epsabs=cfg.abs_tol, epsrel=cfg.rel_tol,
        limit=cfg.max_subdivisions, full_output=1,
    )
    return _finish(raw, cfg, f"integrate over [{a}, {b}]")


def integrate_weighted(g: Callable[[float], float], lo: float, hi: float,
                       left: float, right: float, cfg: QuadConfig) -> QuadResult:
    """
    Integral of (t-lo)^left (hi-t)^right g(t) over [lo, hi]

    Args:
        g: Smooth bounded factor (may be evaluated at the endpoints)
        lo: Lower limit
        hi: Upper limit
        left: Exponent at lo, > -1
        right: Exponent at hi, > -1
        cfg: Tolerances

    Returns:
        QuadResult(value, error)
    """
    if not lo < hi:
        raise DomainError(f"integrate_weighted requires lo < hi, got [{lo}, {hi}]")
    if left <= -1.0 or right <= -1.0:
        raise DomainError(f"weight exponents must exceed -1, got ({left}, {right})")
    if left == 0.0 and right == 0.0:
        return integrate(g, lo, hi, cfg)

    raw = sp_integrate.quad(
        g, lo, hi,
        weight='alg', wvar=(left, right),
        epsabs=cfg.abs_tol, epsrel=cfg.rel_tol,
        limit=cfg.max_subdivisions, full_output=1,
    )
    return _finish(raw, cfg, f"weighted integral over [{lo}, {hi}] exponents ({left:.4g}, {right:.4g})")


def integrate_singular(g: Callable[[float], float], w: SingularWeight, cfg: QuadConfig,
                       *, breakpoints: Sequence[float] = (), upper: float = 1.0) -> QuadResult:
    """
    Integral of t^(a-1) (1-t)^(-b) g(t) over [0, upper]

    The range is split at `breakpoints` (kinks of g). The piece touching 0
    carries t^(a-1) as a QUADPACK weight, the piece touching 1 carries
    (1-t)^(-b); interior pieces are plain adaptive integrals.

    Args:
        g: Bounded continuous factor
        w: Singular weight
        cfg: Tolerances
        breakpoints: Interior points where g is not smooth
        upper: Right end of the range, in (0, 1]

    Returns:
        QuadResult(value, error)
    """
    if not 0.0 < upper <= 1.0:
        raise DomainError(f"upper limit must lie in (0, 1], got {upper}")

    a_exp = w.left_exponent - 1.0
    b_exp = -w.right_exponent
    reaches_one = upper == 1.0
    edges = [0.0] + sorted(bp for bp in set(breakpoints) if 0.0 < bp < upper) + [upper]

    if len(edges) == 2 and reaches_one:
        return integrate_weighted(g, 0.0, 1.0, a_exp, b_exp, cfg)

    total = 0.0
    error = 0.0
    last = len(edges) - 2
    for i, (lo, hi) in enumerate(zip(edges[:-1], edges[1:])):
        if i == 0:
            piece = integrate_weighted(
                lambda t: g(t) * (1.0 - t) ** b_exp, lo, hi, a_exp, 0.0, cfg)
        elif i == last and reaches_one:
            piece = integrate_weighted(
                lambda t: g(t) * t ** a_exp, lo, hi, 0.0, b_exp, cfg)
        else:
            piece = integrate(lambda t: g(t) * w(t), lo, hi, cfg)
        total += piece.value
        error += piece.error
    return QuadResult(total, error)


# ============================================================================
# Fixed-order Gauss rules
# ============================================================================

def gauss_jacobi_rule(n: int, alpha: float, beta: float,
                      lo: float, hi: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Nodes and weights for integral_lo^hi (hi-u)^alpha (u-lo)^beta phi(u) du

    Args:
        n: Number of nodes
        alpha: Exponent at hi (> -1)
        beta: Exponent at lo (> -1)
        lo: Left end
        hi: Right end

    Returns:
        (nodes, weights) with the interval scaling folded into the weights
    """
    if n < 1:
        raise DomainError(f"rule order must be >= 1, got {n}")
    x, wts = sp_special.roots_jacobi(n, alpha, beta)
    half = 0.5 * (hi - lo)
    nodes = lo + half * (1.0 + x)
    return nodes, wts * half ** (alpha + beta + 1.0)


def gauss_legendre_rule(n: int, lo: float, hi: float) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights mapped to [lo, hi]."""
    if n < 1:
        raise DomainError(f"rule order must be >= 1, got {n}")
    x, wts = sp_special.roots_legendre(n)
    half = 0.5 * (hi - lo)
    return lo + half * (1.0 + x), wts * half
