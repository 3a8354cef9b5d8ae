"""
Command-Line Entry Point
Subcommands: check, scan, casework, sturm, normest, selftest.

Exit codes:
    0   success / definite status / Confirmed
    1   library error
    2   indeterminate status or verdict
    3   norm estimate above the conjectured norm (falsification alarm)
    64  usage or configuration error
    65  unparseable polynomial or endpoint, endpoint is a root
    74  I/O error
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from rich.console import Console
from rich.table import Table

from .. import __version__
from ..analysis.conditions import StatusTag, classify, conjectured_norm
from ..analysis.kernel import Params
from ..certify.casework import (
    PROP_A_ALPHA_MAX,
    PROP_B_ALPHA_MAX,
    CaseId,
    CaseReport,
    Verdict,
    example_alpha1,
    prop42a_verify,
    prop42b_verify,
    run_all_cases,
)
from ..certify.polyexact import (
    certify_sign,
    count_roots,
    format_polynomial,
    isolate_roots,
    parse_polynomial,
    poly_eval,
    sturm_chain,
    to_rational,
)
from ..config import load_config_file, resolve_settings, setup_logging
from ..errors import (
    ConfigError,
    DomainError,
    EndpointIsRoot,
    HilbertNormError,
    PolynomialParseError,
)
from ..estimate.normest import DEFAULT_ANGULAR_NODES, DEFAULT_RADIAL_NODES, norm_ratio_estimate
from ..special.quadrature import QuadConfig
from .reports import (
    SCHEMA_VERSION,
    NormEstimateReport,
    RootCountReport,
    VerificationReport,
    utc_timestamp,
    write_csv,
    write_json,
)
from .scan import PMode, build_grid, parse_float_range, parse_interval, run_scan
from .selftest import render_results, run_selftest

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INDETERMINATE = 2
EXIT_FALSIFIED = 3
EXIT_USAGE = 64
EXIT_DATAERR = 65
EXIT_IOERR = 74

FALSIFICATION_SLACK = 1.001

CASE_CHOICES = {
    'i': CaseId.I,
    'ii': CaseId.II,
    'iii': CaseId.III,
    'iv': CaseId.IV,
    'prop42a': CaseId.Prop42a,
    'prop42b': CaseId.Prop42b,
}
ALL_CASES = 'all'


class UsageError(Exception):
    """Bad command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ============================================================================
# Parser
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog='hilbertnorm',
        description="Verification toolkit for the norm of the Hilbert matrix on A^p_alpha",
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    noise = parser.add_mutually_exclusive_group()
    noise.add_argument('-v', '--verbose', action='store_true', help="Debug logging")
    noise.add_argument('-q', '--quiet', action='store_true', help="Warnings and errors only")
    parser.add_argument('--config', type=str, default=None, help="key = value settings file")
    parser.add_argument('--threads', type=int, default=None, help="Worker count (env HNL_THREADS)")
    parser.add_argument('--abs-tol', type=float, default=None, dest='abs_tol',
                        help="Absolute quadrature tolerance (default 1e-12)")
    parser.add_argument('--rel-tol', type=float, default=None, dest='rel_tol',
                        help="Relative quadrature tolerance (default 1e-10)")
    parser.add_argument('--max-subdivisions', type=int, default=None, dest='max_subdivisions',
                        help="QUADPACK subinterval limit (default 2000)")

    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    check = sub.add_parser('check', help="Classify one (alpha, p)")
    check.add_argument('--alpha', type=float, required=True)
    check.add_argument('--p', type=float, required=True)
    check.add_argument('--tol', type=float, default=None, help="Alias of --rel-tol")
    check.add_argument('--full', action='store_true', help="Also evaluate forms (a) and (b)")
    check.add_argument('--json', action='store_true', help="Print the report as JSON")
    check.add_argument('--no-timestamp', action='store_true', dest='no_timestamp')

    scan = sub.add_parser('scan', help="Classify an (alpha, p) grid")
    scan.add_argument('--alpha-range', type=str, required=True, dest='alpha_range', help="lo:hi:step")
    scan.add_argument('--p-mode', choices=[m.value for m in PMode], default=PMode.RelativeToRegime.value,
                      dest='p_mode')
    scan.add_argument('--p-steps', type=int, default=10, dest='p_steps')
    scan.add_argument('--p-range', type=str, default=None, dest='p_range', help="lo:hi (absolute mode)")
    scan.add_argument('--out', type=str, required=True)
    scan.add_argument('--format', choices=['csv', 'json'], default='csv', dest='fmt')
    scan.add_argument('--no-timestamp', action='store_true', dest='no_timestamp')
    scan.add_argument('--no-progress', action='store_true', dest='no_progress')

    casework = sub.add_parser('casework', help="Reproduce one mechanized case")
    casework.add_argument('--case', choices=sorted(CASE_CHOICES) + [ALL_CASES], required=True)
    casework.add_argument('--alpha', type=str, default=None,
                          help="Exact rational alpha for prop42a / prop42b")

    sturm = sub.add_parser('sturm', help="Sturm root count or sign certificate")
    sturm.add_argument('--poly', type=str, required=True, help='e.g. "-2 + x^2"')
    sturm.add_argument('--lo', type=str, required=True)
    sturm.add_argument('--hi', type=str, required=True)
    sturm.add_argument('--certify-sign', action='store_true', dest='certify_sign')

    normest = sub.add_parser('normest', help="Finite-section norm estimate")
    normest.add_argument('--alpha', type=float, required=True)
    normest.add_argument('--p', type=float, required=True)
    normest.add_argument('--gamma', type=float, required=True)
    normest.add_argument('--N', type=int, required=True, dest='n')
    normest.add_argument('--nodes', type=int, default=DEFAULT_RADIAL_NODES, help="Radial nodes per panel")
    normest.add_argument('--angular-nodes', type=int, default=DEFAULT_ANGULAR_NODES, dest='angular_nodes')

    sub.add_parser('selftest', help="Run the fast invariant suite")
    return parser


# ============================================================================
# Settings
# ============================================================================

def _settings(args: argparse.Namespace) -> dict:
    file_values = load_config_file(args.config) if args.config else None
    rel_tol = getattr(args, 'tol', None) or args.rel_tol
    overrides = {
        'threads': args.threads,
        'abs_tol': args.abs_tol,
        'rel_tol': rel_tol,
        'max_subdivisions': args.max_subdivisions,
    }
    if args.verbose:
        overrides['log_level'] = 'DEBUG'
    elif args.quiet:
        overrides['log_level'] = 'WARNING'
    return resolve_settings(file_values, overrides)


def _quad_config(settings: dict) -> QuadConfig:
    try:
        return QuadConfig(abs_tol=settings['abs_tol'], rel_tol=settings['rel_tol'],
                          max_subdivisions=settings['max_subdivisions'])
    except ValueError as exc:
        raise ConfigError(f"invalid tolerances: {exc}") from exc


def _params(alpha: float, p: float) -> Params:
    try:
        return Params(alpha=alpha, p=p)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


# ============================================================================
# Commands
# ============================================================================

def _print_report(report: VerificationReport, console: Console) -> None:
    table = Table(title=f"alpha = {report.alpha:g}, p = {report.p:g}", show_header=False)
    table.add_column("field")
    table.add_column("value")
    table.add_row("regime", report.regime)
    table.add_row("status", report.status.value)
    if report.condition_c is not None:
        table.add_row("condition_c", f"{report.condition_c:.12g} +/- {report.condition_c_err:.2g}")
    if report.s_bound is not None:
        table.add_row("s_bound", f"{report.s_bound:.12g}")
    table.add_row("norm_conjectured", f"{report.norm_conjectured:.12g}")
    for note in report.notes:
        table.add_row("note", note)
    console.print(table)


def cmd_check(args: argparse.Namespace, cfg: QuadConfig, settings: dict, console: Console) -> int:
    params = _params(args.alpha, args.p)
    result = classify(params, cfg, full=args.full)
    stamp = None if args.no_timestamp else utc_timestamp()
    report = VerificationReport.from_status(params, result, timestamp=stamp)
    if args.json:
        print(report.to_json())
    else:
        _print_report(report, console)
    if args.full and result.values is not None and result.values.a_value is not None:
        logger.info("form (a) = %.12g, form (b) = %.12g", result.values.a_value, result.values.b_value)
    return EXIT_OK if report.is_definite else EXIT_INDETERMINATE


def cmd_scan(args: argparse.Namespace, cfg: QuadConfig, settings: dict, console: Console) -> int:
    alphas = parse_float_range(args.alpha_range)
    p_range = parse_interval(args.p_range) if args.p_range else None
    points = build_grid(alphas, PMode(args.p_mode), args.p_steps, p_range)
    stamp = None if args.no_timestamp else utc_timestamp()
    reports = run_scan(points, cfg, threads=settings['threads'], timestamp=stamp,
                       progress=not args.no_progress)
    out = Path(args.out)
    if args.fmt == 'csv':
        write_csv(reports, out)
    else:
        write_json(reports, out)
    indeterminate = sum(1 for r in reports if r.status == StatusTag.RegimeB_Indeterminate)
    if indeterminate:
        logger.info("%d of %d points indeterminate", indeterminate, len(reports))
    return EXIT_OK


def _casework_payload(report: CaseReport) -> dict:
    logger.info("case %s: %s (margin %.6g)", report.case_id.value, report.verdict.value,
                report.computed_margin)
    return report.model_dump(mode='json')


def _casework_exit(verdicts: List[Verdict]) -> int:
    if any(v == Verdict.Failed for v in verdicts):
        return EXIT_ERROR
    if any(v == Verdict.Indeterminate for v in verdicts):
        return EXIT_INDETERMINATE
    return EXIT_OK


def cmd_casework(args: argparse.Namespace, cfg: QuadConfig, settings: dict, console: Console) -> int:
    if args.case == ALL_CASES:
        reports = run_all_cases(cfg)
        payload = {'schema': SCHEMA_VERSION, 'cases': [_casework_payload(r) for r in reports]}
        print(json.dumps(payload, indent=2))
        return _casework_exit([r.verdict for r in reports])

    case_id = CASE_CHOICES[args.case]
    if case_id == CaseId.Prop42a:
        alpha = to_rational(args.alpha) if args.alpha else PROP_A_ALPHA_MAX
        report = prop42a_verify([alpha])[0]
    elif case_id == CaseId.Prop42b:
        alpha = to_rational(args.alpha) if args.alpha else PROP_B_ALPHA_MAX
        report = prop42b_verify(alpha)
    else:
        report = example_alpha1(case_id, cfg)
    print(json.dumps({'schema': SCHEMA_VERSION, **_casework_payload(report)}, indent=2))
    return _casework_exit([report.verdict])


def cmd_sturm(args: argparse.Namespace, cfg: QuadConfig, settings: dict, console: Console) -> int:
    poly = parse_polynomial(args.poly)
    try:
        lo, hi = to_rational(args.lo), to_rational(args.hi)
    except DomainError as exc:
        raise PolynomialParseError(str(exc)) from exc
    if args.certify_sign:
        if poly_eval(poly, hi) == 0:
            raise EndpointIsRoot(f"{hi} is a root of {format_polynomial(poly)}", endpoint=hi)
        cert = certify_sign(poly, lo, hi)
        print(json.dumps({'schema': SCHEMA_VERSION, **cert.model_dump(mode='json')}, indent=2))
        return EXIT_OK
    count = count_roots(sturm_chain(poly), lo, hi)
    report = RootCountReport(
        polynomial=format_polynomial(poly), lo=str(lo), hi=str(hi), root_count=count,
        isolating_intervals=[(str(a), str(b)) for a, b in isolate_roots(poly, lo, hi)],
    )
    print(report.model_dump_json(by_alias=True, indent=2))
    return EXIT_OK


def cmd_normest(args: argparse.Namespace, cfg: QuadConfig, settings: dict, console: Console) -> int:
    params = _params(args.alpha, args.p)
    target = conjectured_norm(params)
    ratio = norm_ratio_estimate(params, args.gamma, args.n, args.nodes, args.angular_nodes)
    falsified = ratio > target * FALSIFICATION_SLACK
    report = NormEstimateReport(
        alpha=params.alpha, p=params.p, gamma=args.gamma, n=args.n, ratio=ratio,
        norm_conjectured=target, gap=target - ratio, falsified=falsified,
        timestamp=utc_timestamp(),
    )
    print(report.model_dump_json(by_alias=True, indent=2))
    if falsified:
        logger.error("ratio %.10g exceeds the conjectured norm %.10g", ratio, target)
        return EXIT_FALSIFIED
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace, cfg: QuadConfig, settings: dict, console: Console) -> int:
    results = run_selftest(cfg)
    render_results(results, console)
    return EXIT_OK if all(r.passed for r in results) else EXIT_ERROR


COMMANDS = {
    'check': cmd_check,
    'scan': cmd_scan,
    'casework': cmd_casework,
    'sturm': cmd_sturm,
    'normest': cmd_normest,
    'selftest': cmd_selftest,
}


# ============================================================================
# Entry point
# ============================================================================

def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one subcommand

    Args:
        argv: Arguments without the program name (default sys.argv[1:])

    Returns:
        Process exit code
    """
    args = build_parser().parse_args(argv)
    console = Console()
    try:
        settings = _settings(args)
        setup_logging(settings['log_level'])
        cfg = _quad_config(settings)
        return COMMANDS[args.command](args, cfg, settings, console)
    except (UsageError, ConfigError) as exc:
        print(f"hilbertnorm: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PolynomialParseError, EndpointIsRoot) as exc:
        print(f"hilbertnorm: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    except OSError as exc:
        print(f"hilbertnorm: I/O error: {exc}", file=sys.stderr)
        return EXIT_IOERR
    except HilbertNormError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        print(f"hilbertnorm: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
