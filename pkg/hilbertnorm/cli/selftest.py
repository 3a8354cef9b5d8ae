"""
Self Test
A fast in-process subset of the invariant suite, rendered as a rich table.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np
from rich.console import Console
from rich.table import Table

from ..analysis.conditions import condition_a, condition_b, condition_c
from ..analysis.kernel import Params, psi_weight
from ..certify.casework import CaseId, Verdict, example_alpha1
from ..certify.fixtures import G1, fixture_discrepancies
from ..certify.polyexact import Sign, certify_sign
from ..errors import HilbertNormError
from ..estimate.normest import TaylorCoeffs, hilbert_apply, t_composition_apply
from ..special.quadrature import QuadConfig, integrate_singular
from ..special.specfun import BoundDomain, beta, beta_lower_bound, beta_upper_bound, reg_inc_beta

logger = logging.getLogger(__name__)

Check = Callable[[QuadConfig], Tuple[bool, str]]


@dataclass(frozen=True)
class SelftestResult:
    name: str
    passed: bool
    detail: str


# ============================================================================
# Checks
# ============================================================================

def _beta_reflection(cfg: QuadConfig) -> Tuple[bool, str]:
    worst = max(abs(beta(x, 1.0 - x) * math.sin(math.pi * x) / math.pi - 1.0)
                for x in np.linspace(0.05, 0.95, 19))
    return worst <= 1e-10, f"max rel err {worst:.2e}"


def _inc_beta_complement(cfg: QuadConfig) -> Tuple[bool, str]:
    worst = max(abs(reg_inc_beta(t, 0.7, 2.5) + reg_inc_beta(1.0 - t, 2.5, 0.7) - 1.0)
                for t in np.linspace(0.05, 0.95, 19))
    return worst <= 1e-10, f"max err {worst:.2e}"


def _beta_bounds(cfg: QuadConfig) -> Tuple[bool, str]:
    x, y = 2.5, 0.6
    value = beta(x, y)
    lower = beta_lower_bound(x, y, BoundDomain.XGeOne_YLeOne)
    upper = beta_upper_bound(x, y, BoundDomain.XGeOne_YLeOne)
    return lower <= value <= upper, f"{lower:.6f} <= {value:.6f} <= {upper:.6f}"


def _psi_mass(cfg: QuadConfig) -> Tuple[bool, str]:
    params = Params(alpha=0.5, p=4.0)
    got = integrate_singular(lambda t: 1.0, psi_weight(params), cfg).value
    want = math.pi / math.sin(params.a * math.pi)
    err = abs(got / want - 1.0)
    return err <= 1e-9, f"rel err {err:.2e}"


def _condition_equivalence(cfg: QuadConfig) -> Tuple[bool, str]:
    params = Params(alpha=0.0, p=3.5)
    a = condition_a(params, cfg)
    b = condition_b(params, cfg)
    c = condition_c(params, cfg)
    scale = max(1.0, abs(a))
    gap = max(abs(a - b), abs(a - 2.0 * params.psi_mass * c)) / scale
    return gap <= 1e-7, f"a={a:.8f} b={b:.8f} 2Bc={2.0 * params.psi_mass * c:.8f}"


def _fixture_tables(cfg: QuadConfig) -> Tuple[bool, str]:
    names = [d.name for d in fixture_discrepancies()]
    return names == ['G1D5'], f"discrepancies: {', '.join(names) or 'none'}"


def _g1_certificate(cfg: QuadConfig) -> Tuple[bool, str]:
    cert = certify_sign(G1, '49/10', '51/10')
    return cert.sign == Sign.Positive, f"g1 {cert.sign.value} on [{cert.lo}, {cert.hi}]"


def _case_iii(cfg: QuadConfig) -> Tuple[bool, str]:
    report = example_alpha1(CaseId.III)
    return report.verdict == Verdict.Confirmed, f"margin {report.computed_margin:.6f}"


def _hilbert_action(cfg: QuadConfig) -> Tuple[bool, str]:
    coeffs = TaylorCoeffs(np.array([1.0, -0.5, 0.25, 0.125]))
    z = 0.3 + 0.2j
    exact = t_composition_apply(coeffs, z, cfg)
    section = hilbert_apply(coeffs, out_len=120)(z)
    err = abs(exact - section)
    return err <= 1e-8, f"|diff| {err:.2e}"


CHECKS: List[Tuple[str, Check]] = [
    ('beta reflection', _beta_reflection),
    ('inc_beta complement', _inc_beta_complement),
    ('elementary Beta bounds', _beta_bounds),
    ('psi mass', _psi_mass),
    ('condition forms agree', _condition_equivalence),
    ('fixture tables', _fixture_tables),
    ('g1 Sturm certificate', _g1_certificate),
    ('alpha=1 case III', _case_iii),
    ('Hilbert matrix action', _hilbert_action),
]


# ============================================================================
# Runner
# ============================================================================

def run_selftest(cfg: QuadConfig) -> List[SelftestResult]:
    """Run every check; library errors count as failures."""
    results = []
    for name, check in CHECKS:
        try:
            passed, detail = check(cfg)
        except HilbertNormError as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        logger.debug("selftest %s: %s (%s)", name, passed, detail)
        results.append(SelftestResult(name, bool(passed), detail))
    return results


def render_results(results: List[SelftestResult], console: Optional[Console] = None) -> None:
    console = console or Console()
    table = Table(title="hilbertnorm selftest")
    table.add_column("check")
    table.add_column("result")
    table.add_column("detail")
    for item in results:
        mark = "[green]PASS[/green]" if item.passed else "[red]FAIL[/red]"
        table.add_row(item.name, mark, item.detail)
    console.print(table)
