"""
Norm Estimator
Finite-section action of the Hilbert matrix on Taylor coefficients,
weighted Bergman norms by quadrature, and the (1-z)^(-gamma) test family
used to estimate ||H|| on A^p_alpha from below.

||f||^p = (alpha+1) integral_0^1 (1-u)^alpha M_p(sqrt(u)) du,  u = r^2,
where M_p(r) is the angular mean of |f(r e^{i theta})|^p.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..analysis.conditions import conjectured_norm
from ..analysis.kernel import Params, WeightedSpace
from ..errors import DomainError
from ..special.quadrature import QuadConfig, gauss_jacobi_rule, gauss_legendre_rule, integrate

logger = logging.getLogger(__name__)

DEFAULT_RADIAL_NODES = 32
DEFAULT_ANGULAR_NODES = 512
MIN_NODES = 16
EXTRA_PANELS = 6


# ============================================================================
# Types
# ============================================================================

@dataclass(frozen=True, eq=False)
class TaylorCoeffs:
    """Leading Taylor coefficients a_0 ... a_{N-1} of f."""
    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 1 or arr.size < 1:
            raise DomainError(f"need a non-empty 1-D coefficient vector, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise DomainError("coefficients must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, 'values', arr)

    @property
    def n(self) -> int:
        return int(self.values.size)

    def __call__(self, z: complex) -> complex:
        return complex(np.polynomial.polynomial.polyval(z, self.values))

    def __add__(self, other: 'TaylorCoeffs') -> 'TaylorCoeffs':
        size = max(self.n, other.n)
        return TaylorCoeffs(np.pad(self.values, (0, size - self.n)) + np.pad(other.values, (0, size - other.n)))

    def scaled(self, factor: float) -> 'TaylorCoeffs':
        return TaylorCoeffs(self.values * factor)


@dataclass(frozen=True)
class CompositionSymbol:
    """w_t(z) = 1/((t-1)z+1) and phi_t(z) = t/((t-1)z+1) for t in (0, 1)."""
    t: float

    def __post_init__(self):
        if not 0.0 < self.t < 1.0:
            raise DomainError(f"t must lie in (0, 1), got {self.t}")

    def weight(self, z: complex) -> complex:
        return 1.0 / ((self.t - 1.0) * z + 1.0)

    def phi(self, z: complex) -> complex:
        return self.t / ((self.t - 1.0) * z + 1.0)

    def apply(self, coeffs: TaylorCoeffs, z: complex) -> complex:
        """T_t f(z) = w_t(z) f(phi_t(z))."""
        return self.weight(z) * coeffs(self.phi(z))


# ============================================================================
# Operator action
# ============================================================================

def hilbert_apply(coeffs: TaylorCoeffs, out_len: Optional[int] = None) -> TaylorCoeffs:
    """
    Finite section of the Hilbert matrix: b_n = sum_k a_k / (n + k + 1)

    Args:
        coeffs: a_0 ... a_{N-1}
        out_len: Number of output coefficients (default N)

    Returns:
        b_0 ... b_{out_len-1}
    """
    size = coeffs.n if out_len is None else int(out_len)
    if size < 1:
        raise DomainError(f"out_len must be >= 1, got {out_len}")
    n = np.arange(size, dtype=float)[:, None]
    k = np.arange(coeffs.n, dtype=float)[None, :]
    return TaylorCoeffs((1.0 / (n + k + 1.0)) @ coeffs.values)


def t_composition_apply(coeffs: TaylorCoeffs, z: complex, cfg: QuadConfig) -> complex:
    """
    Hf(z) as integral_0^1 w_t(z) f(phi_t(z)) dt

    Independent of the finite section: for a polynomial f it returns the
    full (untruncated) Hf(z). Requires |z| < 1.
    """
    if not abs(z) < 1.0:
        raise DomainError(f"z must lie in the unit disc, got {z}")

    def integrand(t: float) -> complex:
        return CompositionSymbol(t).apply(coeffs, z)

    real = integrate(lambda t: integrand(t).real, 0.0, 1.0, cfg)
    imag = integrate(lambda t: integrand(t).imag, 0.0, 1.0, cfg)
    return complex(real.value, imag.value)


# ============================================================================
# Bergman norm
# ============================================================================

def _angular_size(coeffs: TaylorCoeffs, p: float, angular_nodes: int) -> int:
    # trapezoid is exact for |f|^p when p is even and M > (p/2)(N-1)
    need = max(angular_nodes, int(math.ceil(0.5 * p * (coeffs.n - 1))) + 1)
    return 1 << int(math.ceil(math.log2(need)))


def angular_mean(coeffs: TaylorCoeffs, r: float, p: float, angular_nodes: int) -> float:
    """
    Trapezoid mean of |f(r e^{i theta})|^p over M equispaced angles (FFT)
    """
    m = _angular_size(coeffs, p, angular_nodes)
    scaled = coeffs.values * r ** np.arange(coeffs.n)
    if coeffs.n > m:
        scaled = np.bincount(np.arange(coeffs.n) % m, weights=scaled, minlength=m)
    samples = np.fft.ifft(scaled, n=m) * m
    return float(np.mean(np.abs(samples) ** p))


def _radial_rule(n_coeffs: int, radial_nodes: int, alpha: float):
    # graded panels [1-2^-j, 1-2^-(j+1)] in u = r^2; the last panel carries (1-u)^alpha exactly
    panels = int(math.ceil(math.log2(max(n_coeffs, 2)))) + EXTRA_PANELS
    nodes, weights = [], []
    for j in range(panels):
        lo, hi = 1.0 - 2.0 ** (-j), 1.0 - 2.0 ** (-(j + 1))
        x, w = gauss_legendre_rule(radial_nodes, lo, hi)
        nodes.append(x)
        weights.append(w * (1.0 - x) ** alpha)
    x, w = gauss_jacobi_rule(radial_nodes, alpha, 0.0, 1.0 - 2.0 ** (-panels), 1.0)
    nodes.append(x)
    weights.append(w)
    return np.concatenate(nodes), np.concatenate(weights)


def bergman_norm(coeffs: TaylorCoeffs, space: WeightedSpace,
                 radial_nodes: int = DEFAULT_RADIAL_NODES,
                 angular_nodes: int = DEFAULT_ANGULAR_NODES) -> float:
    """
    ||f|| in A^p_alpha with the normalized measure (alpha+1)(1-|z|^2)^alpha dA

    Args:
        coeffs: Taylor coefficients of f
        space: (alpha, p)
        radial_nodes: Gauss nodes per radial panel (>= 16)
        angular_nodes: Minimum number of angles, rounded up to a power of 2 (>= 16)

    Returns:
        The norm (1 for f = 1)
    """
    if radial_nodes < MIN_NODES or angular_nodes < MIN_NODES:
        raise DomainError(f"node counts must be >= {MIN_NODES}, got ({radial_nodes}, {angular_nodes})")
    alpha, p = space.alpha, space.p
    u, w = _radial_rule(coeffs.n, radial_nodes, alpha)
    means = np.array([angular_mean(coeffs, math.sqrt(x), p, angular_nodes) for x in u])
    total = (alpha + 1.0) * float(np.dot(w, means))
    return total ** (1.0 / p)


# ============================================================================
# Test family and estimates
# ============================================================================

def extremal_coeffs(gamma: float, n: int) -> TaylorCoeffs:
    """
    Coefficients of (1-z)^(-gamma): a_k = prod_{j<k}(gamma+j) / k!
    """
    if not 0.0 < gamma < 1.0:
        raise DomainError(f"gamma must lie in (0, 1), got {gamma}")
    if n < 1:
        raise DomainError(f"N must be >= 1, got {n}")
    k = np.arange(1, n, dtype=float)
    ratios = (gamma + k - 1.0) / k
    return TaylorCoeffs(np.concatenate(([1.0], np.cumprod(ratios))))


def norm_ratio_estimate(space: WeightedSpace, gamma: float, n: int,
                        radial_nodes: int = DEFAULT_RADIAL_NODES,
                        angular_nodes: int = DEFAULT_ANGULAR_NODES) -> float:
    """
    ||H f_gamma|| / ||f_gamma|| at truncation N, a lower estimate of ||H||

    Args:
        space: (alpha, p)
        gamma: Exponent of the test function, 0 < gamma < (2+alpha)/p
        n: Truncation N

    Returns:
        The ratio
    """
    limit = (2.0 + space.alpha) / space.p
    if not 0.0 < gamma < limit:
        raise DomainError(f"gamma must lie in (0, {limit:.6g}), got {gamma}")
    f = extremal_coeffs(gamma, n)
    hf = hilbert_apply(f)
    ratio = bergman_norm(hf, space, radial_nodes, angular_nodes) / bergman_norm(f, space, radial_nodes, angular_nodes)
    logger.debug("ratio alpha=%s p=%s gamma=%s N=%d: %.8f", space.alpha, space.p, gamma, n, ratio)
    return ratio


def convergence_study(params: Params, gammas: Sequence[float], sizes: Sequence[int],
                      radial_nodes: int = DEFAULT_RADIAL_NODES,
                      angular_nodes: int = DEFAULT_ANGULAR_NODES) -> List[Dict[str, float]]:
    """
    Ratio and gap to pi / sin((2+alpha)pi/p) for each (gamma, N)

    Returns:
        Rows with keys gamma, n, ratio, conjectured, gap
    """
    target = conjectured_norm(params)
    rows = []
    for gamma in gammas:
        for n in sizes:
            ratio = norm_ratio_estimate(params, gamma, n, radial_nodes, angular_nodes)
            rows.append({'gamma': gamma, 'n': n, 'ratio': ratio,
                         'conjectured': target, 'gap': target - ratio})
    logger.info("convergence study alpha=%s p=%s: %d rows", params.alpha, params.p, len(rows))
    return rows
