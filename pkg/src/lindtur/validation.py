"""Named check suites behind the `validate` subcommand.

Each suite returns (name, passed, detail).  Tolerance keys: drazin, fcs_j,
fcs_d, sensitivity, bound_slack, mc_se.
"""
from dataclasses import dataclass, replace

import numpy as np

from .errors import ConfigError
from .fcs import cumulants_numeric, deformed_mean_sensitivity, mean_current_analytic, noise_analytic
from .models import MASER_DEFAULTS, build_classical_reference, build_ssdb, ClassicalParams
from .superop import build_liouvillian, drazin_inverse, steady_state, trace_row, vectorize
from .trajectories import simulate_ensemble

DEFAULT_TOLS = {
    "drazin": 1e-10,
    "fcs_j": 1e-5,
    "fcs_d": 1e-3,
    "sensitivity": 1e-4,
    "bound_slack": 1e-9,
    "mc_se": 3.0,
}

DRAW_COUNT = 200
DRAW_SEED = 20260822
MC_SEED = 7
MC_TRAJ = 2000


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str


def _merge_tols(overrides):
    tols = dict(DEFAULT_TOLS)
    unknown = set(overrides or {}) - set(tols)
    if unknown:
        raise ConfigError(f"unknown tolerance keys: {sorted(unknown)}")
    tols.update(overrides or {})
    return tols


def _classical_params(p):
    return ClassicalParams(**{f: getattr(p, f) for f in (
        "gamma_h", "gamma_c", "n_h", "n_c", "omega_drive_amp", "detuning")})


def _drazin_suite(tols):
    worst = 0.0
    for model in (
        build_ssdb(MASER_DEFAULTS),
        build_ssdb(replace(MASER_DEFAULTS, detuning=0.7)),
        build_classical_reference(_classical_params(MASER_DEFAULTS)),
    ):
        liou = build_liouvillian(model)
        ss = steady_state(liou)
        dz = drazin_inverse(liou, ss)
        lm, lp = liou.matrix, dz.matrix
        d2 = lm.shape[0]
        proj = np.outer(vectorize(ss.rho), trace_row(model.dim))
        q = np.eye(d2) - proj
        checks = [
            lm @ lp - q,
            lp @ lm - q,
            lp @ lm @ lp - lp,
            lm @ lp @ lm - lm,
            (lp @ vectorize(ss.rho)).reshape(-1, 1),
            (trace_row(model.dim) @ lp).reshape(1, -1),
        ]
        worst = max(worst, max(np.max(np.abs(c)) for c in checks))
    passed = bool(worst <= tols["drazin"])
    return SuiteResult("drazin", passed, f"max identity deviation {worst:.3e} vs {tols['drazin']:.1e}")


def _fcs_suite(tols):
    worst_j, worst_d = 0.0, 0.0
    for delta in (-1.5, -0.75, 0.0, 0.75, 1.5):
        model = build_ssdb(replace(MASER_DEFAULTS, detuning=delta))
        liou = build_liouvillian(model)
        ss = steady_state(liou)
        dz = drazin_inverse(liou, ss)
        j_a = mean_current_analytic(model, ss)
        d_a = noise_analytic(model, ss, dz)
        num = cumulants_numeric(model)
        worst_j = max(worst_j, abs(num.J - j_a) / abs(j_a))
        worst_d = max(worst_d, abs(num.D - d_a) / abs(d_a))
    passed = bool(worst_j <= tols["fcs_j"] and worst_d <= tols["fcs_d"])
    return SuiteResult(
        "fcs", passed,
        f"J rel dev {worst_j:.3e} vs {tols['fcs_j']:.1e}, D rel dev {worst_d:.3e} vs {tols['fcs_d']:.1e}",
    )


def _sensitivity_suite(tols):
    # attainable contracts only: the incoherent reference recovers tau*J and a
    # currentless model responds with 0 (the coherent-model identity is
    # documented as failing in the acceptance tests and is excluded here)
    model = build_classical_reference(_classical_params(MASER_DEFAULTS))
    ss = steady_state(build_liouvillian(model))
    tau = 100.0 / ss.spectral_gap
    sens = deformed_mean_sensitivity(model, ss, tau=tau, chi_step=2e-4)
    tau_j = tau * mean_current_analytic(model, ss)
    rel = abs(sens - tau_j) / abs(tau_j)
    passed = bool(rel <= tols["sensitivity"])
    return SuiteResult(
        "sensitivity", passed,
        f"incoherent-model deviation {rel:.3e} vs {tols['sensitivity']:.1e}",
    )


def _bounds_suite(tols):
    from .sweeps import evaluate_point

    rng = np.random.default_rng(DRAW_SEED)
    slack = tols["bound_slack"]
    failures = []
    for i in range(DRAW_COUNT):
        delta = float(rng.uniform(-1.5, 1.5))
        omega = float(rng.uniform(0.01, 0.8))
        params = replace(MASER_DEFAULTS, detuning=delta, omega_drive_amp=omega)
        q = evaluate_point("ssdb", params, bound_slack=slack)
        c = evaluate_point("classical", params, bound_slack=slack)
        if q["error"]:
            failures.append(f"draw {i}: ssdb {q['error']}")
        if c["error"]:
            failures.append(f"draw {i}: classical {c['error']}")
        elif c["tur_lhs"] < 2.0 - slack:
            failures.append(f"draw {i}: classical bound {c['tur_lhs']:.6f} < 2")
    passed = not failures
    detail = f"{DRAW_COUNT} draws clean" if passed else "; ".join(failures[:5])
    return SuiteResult("bounds", passed, detail)


def _monte_carlo_suite(tols):
    model = build_ssdb(MASER_DEFAULTS)
    liou = build_liouvillian(model)
    ss = steady_state(liou)
    dz = drazin_inverse(liou, ss)
    j_a = mean_current_analytic(model, ss)
    d_a = noise_analytic(model, ss, dz)
    res = simulate_ensemble(model, tau=50.0 / ss.spectral_gap, n_traj=MC_TRAJ, seed=MC_SEED)
    pull_j = abs(res.mean_rate - j_a) / res.se_mean
    pull_d = abs(res.var_rate - d_a) / res.se_var
    k = tols["mc_se"]
    passed = bool(pull_j <= k and pull_d <= k)
    return SuiteResult(
        "monte_carlo", passed,
        f"J pull {pull_j:.2f} se, D pull {pull_d:.2f} se vs {k:.1f}",
    )


def run_validate(tolerance_overrides=None, skip_mc=False):
    """Run all suites; returns (all_passed, [SuiteResult])."""
    tols = _merge_tols(tolerance_overrides)
    suites = [_drazin_suite, _fcs_suite, _sensitivity_suite, _bounds_suite]
    if not skip_mc:
        suites.append(_monte_carlo_suite)
    results = [suite(tols) for suite in suites]
    return all(r.passed for r in results), results
