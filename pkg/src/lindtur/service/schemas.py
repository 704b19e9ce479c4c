"""Request/response models for the service endpoints."""
from typing import Literal, Optional

from pydantic import BaseModel, Field


class ParamsIn(BaseModel):
    """Model parameters; defaults are the maser operating point."""

    gamma_h: float = 0.1
    gamma_c: float = 2.0
    n_h: float = 5.0
    n_c: float = 0.027
    omega: float = 0.15
    detuning: float = 0.0


class ReportRequest(BaseModel):
    kind: Literal["ssdb", "classical"] = "ssdb"
    params: ParamsIn = Field(default_factory=ParamsIn)
    bound_slack: Optional[float] = None


class ReportResponse(BaseModel):
    J: Optional[float] = None
    D: Optional[float] = None
    sigma: Optional[float] = None
    psi: Optional[float] = None
    upsilon: Optional[float] = None
    psi_cap: Optional[float] = None
    qfi_rate: Optional[float] = None
    tur_lhs: Optional[float] = None
    coherence_bound: Optional[float] = None
    xi_bound: Optional[float] = None
    classical_bound: Optional[float] = None
    sigma_lower: Optional[float] = None
    error: str = ""


class SweepRequest(BaseModel):
    kind: Literal["ssdb", "classical", "both"] = "ssdb"
    params: ParamsIn = Field(default_factory=ParamsIn)
    variable: Literal["detuning", "n_c"] = "detuning"
    lo: float
    hi: float
    points: int = Field(ge=1)
    seed: int = 0
    bound_slack: Optional[float] = None


class TableResponse(BaseModel):
    """Columns, comment header lines, and rows; None cells mark error'd values."""

    columns: list[str]
    comments: list[str]
    rows: list[dict[str, Optional[float | str]]]


class ScatterRequest(BaseModel):
    params: ParamsIn = Field(default_factory=ParamsIn)
    samples: int = Field(ge=0)
    delta_lo: float = -1.5
    delta_hi: float = 1.5
    omega_lo: float = 0.01
    omega_hi: float = 0.8
    seed: int = 0
    bound_slack: Optional[float] = None


class ValidateRequest(BaseModel):
    skip_mc: bool = False
    tolerances: dict[str, float] = Field(default_factory=dict)


class SuiteOut(BaseModel):
    name: str
    passed: bool
    detail: str


class ValidateResponse(BaseModel):
    passed: bool
    suites: list[SuiteOut]


class HealthResponse(BaseModel):
    status: str
    version: str
