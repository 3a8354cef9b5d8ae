"""
CLI Package
argparse front end, report models, grid scans and the selftest
"""

from .main import (
    EXIT_OK,
    EXIT_ERROR,
    EXIT_INDETERMINATE,
    EXIT_FALSIFIED,
    EXIT_USAGE,
    EXIT_DATAERR,
    EXIT_IOERR,
    build_parser,
    main,
)
from .reports import (
    CSV_COLUMNS,
    SCHEMA_VERSION,
    VerificationReport,
    NormEstimateReport,
    RootCountReport,
    reports_frame,
    write_csv,
    read_csv,
    write_json,
)
from .scan import PMode, parse_float_range, p_grid, build_grid, evaluate_point, run_scan
from .selftest import SelftestResult, run_selftest, render_results

__all__ = [
    # Entry point
    'build_parser',
    'main',
    'EXIT_OK',
    'EXIT_ERROR',
    'EXIT_INDETERMINATE',
    'EXIT_FALSIFIED',
    'EXIT_USAGE',
    'EXIT_DATAERR',
    'EXIT_IOERR',

    # Reports
    'CSV_COLUMNS',
    'SCHEMA_VERSION',
    'VerificationReport',
    'NormEstimateReport',
    'RootCountReport',
    'reports_frame',
    'write_csv',
    'read_csv',
    'write_json',

    # Scans
    'PMode',
    'parse_float_range',
    'p_grid',
    'build_grid',
    'evaluate_point',
    'run_scan',

    # Selftest
    'SelftestResult',
    'run_selftest',
    'render_results',
]

__version__ = '1.0.0'
__author__ = 'hilbertnorm developers'
