"""Grid sweeps and random scatter over model parameters, one bound report per point.

A failing point never aborts a run: its row keeps every computable value and
names the error; cells that cannot be computed carry an explicit ERR token in
the CSV (never a silent blank).
"""
from dataclasses import replace

import numpy as np

from .errors import (
    BoundViolation,
    ConfigError,
    CurrentVanishes,
    LindturError,
)
from .fcs import mean_current_analytic, noise_analytic
from .models import ClassicalParams, build_classical_reference, build_ssdb
from .superop import build_liouvillian, drazin_inverse, steady_state
from .tur import (
    dynamical_activity,
    entropy_production_rate,
    coherence_correction_psi_cap,
    qfi_rate,
    sigma_lower_bound,
    tur_report,
)

REPORT_FIELDS = (
    "J", "D", "sigma", "psi", "upsilon", "psi_cap", "qfi_rate",
    "tur_lhs", "coherence_bound", "xi_bound", "classical_bound", "sigma_lower",
)

NU_CONVENTION = (
    "counting convention: nu=+1 emission into the cold bath, "
    "nu=-1 absorption from the cold bath, hot pair uncounted"
)

_ALLOWED_TOLS = {"bound_slack"}


def _build(kind, params):
    if kind == "ssdb":
        return build_ssdb(params)
    if kind == "classical":
        return build_classical_reference(
            ClassicalParams(**{f: getattr(params, f) for f in (
                "gamma_h", "gamma_c", "n_h", "n_c", "omega_drive_amp", "detuning")})
        )
    raise ConfigError(f"unknown model kind {kind!r}")


def _partial_fields(model):
    """Everything computable when the mean current vanishes (psi undefined)."""
    liou = build_liouvillian(model)
    ss = steady_state(liou)
    dz = drazin_inverse(liou, ss)
    ups = dynamical_activity(model, ss)
    cap = coherence_correction_psi_cap(model, ss, dz)
    sigma = entropy_production_rate(model, ss)
    return {
        "J": mean_current_analytic(model, ss),
        "D": noise_analytic(model, ss, dz),
        "sigma": sigma,
        "psi": None,
        "upsilon": ups,
        "psi_cap": cap,
        "qfi_rate": qfi_rate(model, ss),
        "tur_lhs": None,
        "coherence_bound": None,
        "xi_bound": sigma / (ups + cap) if ups + cap != 0 else None,
        "classical_bound": 2.0,
        "sigma_lower": sigma_lower_bound(model, ss),
    }


def evaluate_point(kind, params, bound_slack=None):
    """One report as a plain dict with an 'error' key ('' when clean)."""
    out = {f: None for f in REPORT_FIELDS}
    out["error"] = ""
    kwargs = {} if bound_slack is None else {"bound_slack": bound_slack}
    try:
        model = _build(kind, params)
        report = tur_report(model, **kwargs)
        for f in REPORT_FIELDS:
            out[f] = getattr(report, f)
    except ConfigError:
        # caller bug, not a point failure: never fold into the error column
        raise
    except BoundViolation as exc:
        out["error"] = "BoundViolation"
        for f in REPORT_FIELDS:
            if f in exc.diagnostics:
                out[f] = exc.diagnostics[f]
    except CurrentVanishes:
        out["error"] = "CurrentVanishes"
        try:
            out.update(_partial_fields(model))
        except LindturError:
            pass
    except LindturError as exc:
        out["error"] = type(exc).__name__
    return out


def _check_tols(tolerances):
    unknown = set(tolerances) - _ALLOWED_TOLS
    if unknown:
        raise ConfigError(f"unknown tolerance overrides: {sorted(unknown)}")
    return tolerances.get("bound_slack")


def _param_comment(params, skip=()):
    parts = []
    for name in ("gamma_h", "gamma_c", "n_h", "n_c", "omega_drive_amp", "detuning"):
        if name not in skip:
            parts.append(f"{name}={format(getattr(params, name), '.16e')}")
    return "fixed params: " + " ".join(parts)


def run_sweep(cfg):
    """Evaluate cfg.points grid points; returns (columns, comments, rows)."""
    slack = _check_tols(cfg.tolerances)
    grid = np.linspace(cfg.lo, cfg.hi, cfg.points)
    kinds = ("ssdb", "classical") if cfg.kind == "both" else (cfg.kind,)
    attr = "detuning" if cfg.variable == "detuning" else "n_c"
    columns = ["model_kind", "swept_var", "swept_value", *REPORT_FIELDS, "error"]
    comments = [
        NU_CONVENTION,
        f"sweep: variable={cfg.variable} lo={format(cfg.lo, '.16e')} "
        f"hi={format(cfg.hi, '.16e')} points={cfg.points} kind={cfg.kind} seed={cfg.seed}",
        _param_comment(cfg.params, skip=(attr,)),
    ]
    rows = []
    for value in grid:
        params = replace(cfg.params, **{attr: float(value)})
        for kind in kinds:
            row = {"model_kind": kind, "swept_var": cfg.variable, "swept_value": float(value)}
            row.update(evaluate_point(kind, params, bound_slack=slack))
            rows.append(row)
    return columns, comments, rows


def run_scatter(cfg):
    """Draw (detuning, omega) pairs uniformly; quantum bound columns plus Q_cl."""
    slack = _check_tols(cfg.tolerances)
    rng = np.random.default_rng(cfg.seed)
    columns = [
        "detuning", "omega_drive_amp", "tur_lhs", "coherence_bound",
        "xi_bound", "q_classical", "error",
    ]
    comments = [
        NU_CONVENTION,
        f"scatter: samples={cfg.samples} seed={cfg.seed} "
        f"delta in [{format(cfg.delta_lo, '.16e')}, {format(cfg.delta_hi, '.16e')}] "
        f"omega in [{format(cfg.omega_lo, '.16e')}, {format(cfg.omega_hi, '.16e')}]",
        _param_comment(cfg.params, skip=("detuning", "omega_drive_amp")),
    ]
    rows = []
    for _ in range(cfg.samples):
        delta = float(rng.uniform(cfg.delta_lo, cfg.delta_hi))
        omega = float(rng.uniform(cfg.omega_lo, cfg.omega_hi))
        params = replace(cfg.params, detuning=delta, omega_drive_amp=omega)
        quantum = evaluate_point("ssdb", params, bound_slack=slack)
        classical = evaluate_point("classical", params, bound_slack=slack)
        errs = [e for e in (quantum["error"], classical["error"]) if e]
        rows.append({
            "detuning": delta,
            "omega_drive_amp": omega,
            "tur_lhs": quantum["tur_lhs"],
            "coherence_bound": quantum["coherence_bound"],
            "xi_bound": quantum["xi_bound"],
            "q_classical": classical["tur_lhs"],
            "error": ";".join(errs),
        })
    return columns, comments, rows


def rows_for_csv(rows):
    """Replace None cells with an explicit ERR:<name> token for CSV output."""
    out = []
    for row in rows:
        token = f"ERR:{row.get('error') or 'unavailable'}"
        out.append({k: (token if v is None else v) for k, v in row.items()})
    return out
