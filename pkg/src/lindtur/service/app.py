"""FastAPI application exposing report, sweep, scatter, and validate."""
from fastapi import FastAPI, HTTPException

from ..config import ScatterConfig, SweepConfig
from ..errors import ConfigError
from ..models import SsdbParams
from ..sweeps import evaluate_point, run_scatter, run_sweep
from ..validation import run_validate
from .schemas import (
    HealthResponse,
    ReportRequest,
    ReportResponse,
    ScatterRequest,
    SuiteOut,
    SweepRequest,
    TableResponse,
    ValidateRequest,
    ValidateResponse,
)

VERSION = "0.1.0"


def _params(p):
    try:
        return SsdbParams(
            gamma_h=p.gamma_h,
            gamma_c=p.gamma_c,
            n_h=p.n_h,
            n_c=p.n_c,
            omega_drive_amp=p.omega,
            detuning=p.detuning,
        )
    except Exception as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def create_app():
    app = FastAPI(title="lindtur", version=VERSION)

    @app.get("/health", response_model=HealthResponse)
    def health():
        return HealthResponse(status="ok", version=VERSION)

    @app.post("/report", response_model=ReportResponse)
    def report(req: ReportRequest):
        row = evaluate_point(req.kind, _params(req.params), bound_slack=req.bound_slack)
        return ReportResponse(**row)

    @app.post("/sweep", response_model=TableResponse)
    def sweep(req: SweepRequest):
        tols = {} if req.bound_slack is None else {"bound_slack": req.bound_slack}
        try:
            cfg = SweepConfig(
                kind=req.kind,
                params=_params(req.params),
                variable=req.variable,
                lo=req.lo,
                hi=req.hi,
                points=req.points,
                output="-",
                seed=req.seed,
                tolerances=tols,
            )
            if not cfg.lo < cfg.hi:
                raise ConfigError("need lo < hi")
            columns, comments, rows = run_sweep(cfg)
        except ConfigError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return TableResponse(columns=columns, comments=comments, rows=rows)

    @app.post("/scatter", response_model=TableResponse)
    def scatter(req: ScatterRequest):
        tols = {} if req.bound_slack is None else {"bound_slack": req.bound_slack}
        try:
            cfg = ScatterConfig(
                params=_params(req.params),
                samples=req.samples,
                delta_lo=req.delta_lo,
                delta_hi=req.delta_hi,
                omega_lo=req.omega_lo,
                omega_hi=req.omega_hi,
                output="-",
                seed=req.seed,
                tolerances=tols,
            )
            if not cfg.delta_lo < cfg.delta_hi or not cfg.omega_lo < cfg.omega_hi:
                raise ConfigError("scatter ranges need lo < hi")
            columns, comments, rows = run_scatter(cfg)
        except ConfigError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return TableResponse(columns=columns, comments=comments, rows=rows)

    @app.post("/validate", response_model=ValidateResponse)
    def validate(req: ValidateRequest):
        try:
            passed, results = run_validate(req.tolerances, skip_mc=req.skip_mc)
        except ConfigError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return ValidateResponse(
            passed=passed,
            suites=[SuiteOut(name=r.name, passed=r.passed, detail=r.detail) for r in results],
        )

    return app


app = create_app()
