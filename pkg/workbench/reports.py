"""
Report Schemas
Pydantic models for every JSON report the workbench emits
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict


class _Report(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ErrorReport(_Report):
    error: str
    message: str
    subcommand: Optional[str] = None


class AdmissibleRangeReport(_Report):
    X: int
    eps: float
    lower: float
    upper: float
    lower_exponent: float
    upper_exponent: float
    empty: bool


class ExponentsReport(_Report):
    k: int
    l: int
    theta_LZ: str
    theta_A: str
    theta_B: str
    theta_C: str
    theta: str
    Theta: str
    best_label: str
    lambda1: str
    lambda2: str
    admissible_H: Optional[AdmissibleRangeReport] = None


class Table1Report(_Report):
    path: str
    k_max: int
    l_max: int
    labels: Dict[str, Dict[str, str]]


class SolvePhiReport(_Report):
    l: float
    k: float
    lambda1: float
    lambda2: float
    residuals: Dict[str, float]
    closed_form_deltas: Dict[str, float]
    branches: Dict[str, str]


class SieveExperimentReport(_Report):
    k: int
    l: int
    X: int
    H: int
    weight: str
    sum: float
    predicted: float
    ratio: float
    seconds: float
    ledger: str


class MainTermCheckReport(_Report):
    k: int
    l: int
    X: int
    H: int
    C: float
    s_diff: float
    main: float
    error: float
    error_shape: float
    fitted_constant: float


class LatticeCountReport(_Report):
    k: int
    l: int
    X: int
    H: int
    count: int
    scale: float
    ratio: float
    power_count: int


class PsiIntervalReport(_Report):
    X: int
    H: int
    difference: float
    ratio: float
    error: float
    error_shape: float
    fitted_constant: float
    exponent: float
    in_short_range: bool


class PsiPoint(_Report):
    x: float
    T: float
    psi_direct: float
    psi_explicit: float
    error: float
    bound: float
    fitted_constant: float


class ExplicitFormulaReport(PsiPoint):
    zeros: str
    zeros_used: int
    max_fitted_constant: float
    points: List[PsiPoint] = []


class SRhoRecordReport(_Report):
    gamma: float
    diff_abs: float
    leading_abs: float
    residual: float
    bound: float
    fitted_constant: float


class SRhoAuditReport(_Report):
    k: int
    l: int
    X: float
    H: float
    zeros_audited: int
    excluded: int
    max_fitted_constant: float
    slope: Optional[float] = None
    expected_slope: float
    records: List[SRhoRecordReport]


class OscAuditReport(_Report):
    path: str
    cases: int
    checks: int
    max_ratio: float
    max_ratio_by_branch: Dict[str, float]
    max_closed_form_error: Optional[float] = None


class PlotDataReport(_Report):
    kind: str
    path: str
    rows: int
    html: Optional[str] = None


REPORT_SCHEMAS = {
    "exponents": ExponentsReport,
    "table1": Table1Report,
    "solve-phi": SolvePhiReport,
    "sieve-experiment": SieveExperimentReport,
    "main-term-check": MainTermCheckReport,
    "lattice-count": LatticeCountReport,
    "psi-interval": PsiIntervalReport,
    "explicit-formula": ExplicitFormulaReport,
    "s-rho-audit": SRhoAuditReport,
    "osc-audit": OscAuditReport,
    "plot-data": PlotDataReport,
}


def validate_report(subcommand, text):
    """
    Parse emitted JSON back into its schema

    Args:
        subcommand (str): Subcommand that produced the report
        text (str): JSON text

    Returns:
        BaseModel: Validated report
    """
    return REPORT_SCHEMAS[subcommand].model_validate_json(text)
