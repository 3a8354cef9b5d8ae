"""
Grid Scan
Evaluates the regime classifier over an (alpha, p) grid in a joblib
worker pool. Results are ordered by (alpha, p) before they are returned.
"""

import logging
import math
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from ..analysis.conditions import classify
from ..analysis.kernel import Params, t_star
from ..errors import ConfigError
from ..special.quadrature import QuadConfig
from .reports import VerificationReport

logger = logging.getLogger(__name__)

RANGE_EPS = 1e-9
GRID_DIGITS = 12


class PMode(str, Enum):
    Absolute = 'absolute'
    RelativeToRegime = 'relative-to-regime'


# ============================================================================
# Grid construction
# ============================================================================

def parse_float_range(text: str) -> Tuple[float, ...]:
    """
    Parse 'lo:hi:step' into the points lo, lo+step, ... <= hi

    lo > hi gives an empty grid.

    Raises:
        ConfigError: malformed text or step <= 0
    """
    parts = text.split(':')
    if len(parts) != 3:
        raise ConfigError(f"expected lo:hi:step, got '{text}'")
    try:
        lo, hi, step = (float(x) for x in parts)
    except ValueError as exc:
        raise ConfigError(f"bad range '{text}': {exc}") from exc
    if not step > 0.0:
        raise ConfigError(f"range step must be positive, got {step}")
    if lo > hi:
        return ()
    count = int(math.floor((hi - lo) / step + RANGE_EPS)) + 1
    return tuple(float(v) for v in np.round(lo + step * np.arange(count), GRID_DIGITS))


def parse_interval(text: str) -> Tuple[float, float]:
    """Parse 'lo:hi'."""
    parts = text.split(':')
    if len(parts) != 2:
        raise ConfigError(f"expected lo:hi, got '{text}'")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise ConfigError(f"bad interval '{text}': {exc}") from exc
    return lo, hi


def p_grid(alpha: float, mode: PMode, steps: int,
           p_range: Optional[Tuple[float, float]] = None) -> Tuple[float, ...]:
    """
    p values for one alpha

    absolute: `steps` points spaced evenly over p_range, ends included.
    relative-to-regime: p = 2+2alpha + tau (t_star - (2+2alpha)) with
    tau = i/(steps+1), i = 1..steps, so every point lies inside RegimeB.
    """
    if steps < 1:
        raise ConfigError(f"p-steps must be >= 1, got {steps}")
    if PMode(mode) == PMode.Absolute:
        if p_range is None:
            raise ConfigError("absolute p mode needs --p-range lo:hi")
        lo, hi = p_range
        if lo > hi:
            return ()
        values = np.linspace(lo, hi, steps) if steps > 1 else np.array([lo])
    else:
        base = 2.0 + 2.0 * alpha
        tau = np.arange(1, steps + 1) / (steps + 1.0)
        values = base + tau * (t_star(alpha) - base)
    return tuple(float(v) for v in np.round(values, GRID_DIGITS))


def build_grid(alphas: Tuple[float, ...], mode: PMode, steps: int,
               p_range: Optional[Tuple[float, float]] = None) -> List[Tuple[float, float]]:
    """All (alpha, p) pairs, sorted; pairs with p <= 2 + alpha are dropped."""
    points = []
    for alpha in alphas:
        for p in p_grid(alpha, mode, steps, p_range):
            if p > 2.0 + alpha:
                points.append((alpha, p))
            else:
                logger.warning("skipping alpha=%s p=%s: p must exceed 2 + alpha", alpha, p)
    return sorted(points)


# ============================================================================
# Evaluation
# ============================================================================

def evaluate_point(alpha: float, p: float, cfg: QuadConfig,
                   timestamp: Optional[str] = None) -> VerificationReport:
    """Classify one grid point. Pure apart from the timestamp."""
    params = Params(alpha=alpha, p=p)
    return VerificationReport.from_status(params, classify(params, cfg), timestamp=timestamp)


def run_scan(points: List[Tuple[float, float]], cfg: QuadConfig, threads: int = 1,
             timestamp: Optional[str] = None, progress: bool = True) -> List[VerificationReport]:
    """
    Evaluate every grid point

    Args:
        points: (alpha, p) pairs
        cfg: Quadrature tolerances
        threads: joblib worker count
        timestamp: Stamp shared by every row (None to omit)
        progress: Show a tqdm bar

    Returns:
        Reports sorted by (alpha, p)
    """
    logger.info("scan: %d points on %d worker(s)", len(points), threads)
    if not points:
        return []
    jobs = (delayed(evaluate_point)(alpha, p, cfg, timestamp) for alpha, p in points)
    results = Parallel(n_jobs=threads, return_as='generator')(jobs)
    reports = list(tqdm(results, total=len(points), desc="scan", unit=" pt",
                        ncols=100, disable=not progress))
    reports.sort(key=lambda r: (r.alpha, r.p))
    logger.info("scan finished: %d reports", len(reports))
    return reports
