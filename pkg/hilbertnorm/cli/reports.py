"""
Report Models
pydantic models for everything the CLI emits, plus CSV / JSON writers.

CSV columns are fixed (CSV_COLUMNS); JSON objects carry `schema: 1`.
"""

import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from .. import __version__
from ..analysis.conditions import ConjectureStatus, StatusTag, conjectured_norm
from ..analysis.kernel import Params

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

CSV_COLUMNS: Tuple[str, ...] = (
    'alpha', 'p', 'regime', 'condition_c', 'condition_c_err',
    's_bound', 'status', 'norm_conjectured',
)

CSV_FLOAT_FORMAT = '%.17g'


def utc_timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec='seconds')


# ============================================================================
# Models
# ============================================================================

class VerificationReport(BaseModel):
    """Classification of one (alpha, p) point."""
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias='schema', description="Report schema version")
    alpha: float = Field(..., description="Weight parameter alpha")
    p: float = Field(..., description="Exponent p")
    regime: str = Field(..., description="Regime tag")
    condition_c: Optional[float] = Field(None, description="Form (c) value")
    condition_c_err: Optional[float] = Field(None, description="Quadrature error of condition_c")
    s_bound: Optional[float] = Field(None, description="S(alpha, p) where defined")
    status: StatusTag = Field(..., description="Conjecture status")
    norm_conjectured: float = Field(..., description="pi / sin((2+alpha) pi / p)")
    norm_estimate: Optional[float] = Field(None, description="Finite-section ratio, if computed")
    notes: List[str] = Field(default_factory=list, description="Why a point is indeterminate")
    timestamp: Optional[str] = Field(None, description="UTC time of evaluation")
    tool_version: str = Field(__version__, description="hilbertnorm version")

    @classmethod
    def from_status(cls, params: Params, result: ConjectureStatus,
                    timestamp: Optional[str] = None) -> 'VerificationReport':
        values = result.values
        return cls(
            alpha=params.alpha,
            p=params.p,
            regime=result.regime.tag.value,
            condition_c=None if values is None else values.c_value,
            condition_c_err=None if values is None else values.c_error,
            s_bound=None if values is None else values.s_bound_value,
            status=result.status,
            norm_conjectured=conjectured_norm(params),
            notes=list(result.notes),
            timestamp=timestamp,
        )

    @property
    def is_definite(self) -> bool:
        return self.status != StatusTag.RegimeB_Indeterminate

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


class NormEstimateReport(BaseModel):
    """Finite-section norm ratio against the conjectured norm."""
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias='schema', description="Report schema version")
    alpha: float = Field(..., description="Weight parameter alpha")
    p: float = Field(..., description="Exponent p")
    gamma: float = Field(..., description="Exponent of the test function (1-z)^(-gamma)")
    n: int = Field(..., description="Truncation N")
    ratio: float = Field(..., description="||H f|| / ||f||")
    norm_conjectured: float = Field(..., description="pi / sin((2+alpha) pi / p)")
    gap: float = Field(..., description="norm_conjectured - ratio")
    falsified: bool = Field(..., description="ratio above norm_conjectured by more than the slack")
    timestamp: Optional[str] = Field(None, description="UTC time of evaluation")
    tool_version: str = Field(__version__, description="hilbertnorm version")


class RootCountReport(BaseModel):
    """Sturm root count of a polynomial on (lo, hi]."""
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias='schema', description="Report schema version")
    polynomial: str = Field(..., description="Polynomial in the textual format")
    lo: str = Field(..., description="Left end, exact rational")
    hi: str = Field(..., description="Right end, exact rational")
    root_count: int = Field(..., description="Distinct real roots in (lo, hi]")
    isolating_intervals: List[Tuple[str, str]] = Field(default_factory=list,
                                                       description="One rational interval per root")


# ============================================================================
# Writers
# ============================================================================

def reports_frame(reports: Sequence[VerificationReport]) -> pd.DataFrame:
    """Scan reports as a DataFrame with exactly CSV_COLUMNS."""
    rows = [r.model_dump(include=set(CSV_COLUMNS), mode='json') for r in reports]
    return pd.DataFrame(rows, columns=list(CSV_COLUMNS))


def write_csv(reports: Sequence[VerificationReport], path: Path) -> None:
    """UTF-8 CSV with a header row; an empty scan gives a header-only file."""
    frame = reports_frame(reports)
    frame.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT, encoding='utf-8')
    logger.info("wrote %d rows to %s", len(frame), path)


def read_csv(path: Path) -> pd.DataFrame:
    return pd.read_csv(path, dtype={'regime': str, 'status': str}, float_precision='round_trip')


def write_json(reports: Sequence[VerificationReport], path: Path) -> None:
    """JSON array, one object per report."""
    payload = [r.model_dump(by_alias=True, mode='json') for r in reports]
    with open(path, 'w', encoding='utf-8') as handle:
        json.dump(payload, handle, indent=2)
    logger.info("wrote %d reports to %s", len(payload), path)
