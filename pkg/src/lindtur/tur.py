"""Entropy production, channel weights, Fisher-information rate, coherence
factor psi, dynamical activity, the coherent correction Psi, and the bound
report combining them.

Channel sums run over ordered channels exactly as the defining expressions are
written; squared-difference pair terms therefore appear once per channel, not
once per unordered pair.
"""
from dataclasses import dataclass

import numpy as np

from .errors import BoundViolation, ConsistencyError
from .fcs import mean_current_analytic, noise_analytic, require_nonzero_current
from .superop import (
    build_liouvillian,
    drazin_inverse,
    hamiltonian_part,
    steady_state,
    trace_row,
    vectorize,
)

IMAG_TOL = 1e-9
BOUND_SLACK = 1e-9
K_TRACE_TOL = 1e-10


@dataclass(frozen=True)
class TurReport:
    """All bound-relevant quantities at one parameter point."""

    J: float
    D: float
    sigma: float
    psi: float
    upsilon: float
    psi_cap: float
    qfi_rate: float
    tur_lhs: float            # D sigma / J^2
    coherence_bound: float    # 2 (1 + psi)^2
    xi_bound: float           # sigma / (upsilon + psi_cap)
    classical_bound: float    # constant 2
    sigma_lower: float


def _real(val, what):
    if abs(val.imag) > IMAG_TOL:
        raise ConsistencyError(f"{what} has imaginary residue {val.imag:.3e}")
    return float(val.real)


def channel_fluxes(model, ss):
    """f_k = Tr{L_k rho_s L_k^dag} for every channel, in order."""
    out = np.empty(len(model.channels))
    for i, ch in enumerate(model.channels):
        out[i] = _real(np.trace(ch.jump @ ss.rho @ ch.jump.conj().T), f"flux of channel {i}")
    return out


def entropy_production_rate(model, ss):
    """sigma = sum_k f_k * ds_k."""
    fluxes = channel_fluxes(model, ss)
    sigma = float(sum(f * ch.delta_s for f, ch in zip(fluxes, model.channels)))
    if sigma < -1e-9:
        raise ConsistencyError(f"entropy production negative beyond tolerance: {sigma:.3e}")
    return sigma


def ell_weights(model, ss):
    """ell_k = (f_k - f_k') / (f_k + f_k'); 0 when both fluxes vanish.

    Channels without a reverse partner take f_k' = 0, so ell_k = 1 whenever
    they carry flux.
    """
    fluxes = channel_fluxes(model, ss)
    out = np.zeros(len(model.channels))
    for i, ch in enumerate(model.channels):
        f = fluxes[i]
        fr = fluxes[ch.reverse_index] if ch.reverse_index is not None else 0.0
        denom = f + fr
        out[i] = (f - fr) / denom if denom != 0.0 else 0.0
    return out


def qfi_rate(model, ss):
    """Fisher-information rate I(0)/tau = sum_k ell_k^2 f_k."""
    fluxes = channel_fluxes(model, ss)
    ells = ell_weights(model, ss)
    return float(np.sum(ells**2 * fluxes))


def sigma_lower_bound(model, ss):
    """sum_k (f_k - f_k')^2 / (f_k + f_k'), ordered channels, 0/0 -> 0."""
    fluxes = channel_fluxes(model, ss)
    total = 0.0
    for i, ch in enumerate(model.channels):
        f = fluxes[i]
        fr = fluxes[ch.reverse_index] if ch.reverse_index is not None else 0.0
        denom = f + fr
        if denom != 0.0:
            total += (f - fr) ** 2 / denom
    return float(total)


def coherence_factor_psi(model, ss, drazin):
    """psi = (1/J) Tr{J_op L+ H_op rho_s} with H_op rho = -i[H, rho]."""
    from .fcs import current_superoperator

    j = require_nonzero_current(mean_current_analytic(model, ss))
    one = trace_row(model.dim)
    h_on_ss = hamiltonian_part(model).matrix @ vectorize(ss.rho)
    val = one @ (current_superoperator(model).matrix @ (drazin.matrix @ h_on_ss))
    return _real(val, "coherence factor") / j


def dynamical_activity(model, ss):
    """Upsilon = total jump flux sum_k f_k."""
    return float(np.sum(channel_fluxes(model, ss)))


def _k_superoperators(model):
    d = model.dim
    eye = np.eye(d)
    h = model.hamiltonian
    k1 = -1j * np.kron(eye, h)
    k2 = 1j * np.kron(h.T, eye)
    for ch in model.channels:
        lk = ch.jump
        n = lk.conj().T @ lk
        k1 += 0.5 * (np.kron(lk.conj(), lk) - np.kron(eye, n))
        k2 += 0.5 * (np.kron(lk.conj(), lk) - np.kron(n.T, eye))
    return k1, k2


def coherence_correction_psi_cap(model, ss, drazin):
    """Psi = -4 Re Tr[K1 L+ K2 rho_s + K2 L+ K1 rho_s].

    K1 rho = -iH rho + (1/2) sum_k (L_k rho L_k^dag - L_k^dag L_k rho) and
    K2 rho = +i rho H + (1/2) sum_k (L_k rho L_k^dag - rho L_k^dag L_k).
    The jump parts are traceless; the bare +-iH terms give the exact trace
    rows <1|K1 = -i vec(H)^dag and <1|K2 = +i vec(H)^dag, which is what the
    consistency check enforces (it reduces to <1|K = 0 for H = 0).
    """
    d = model.dim
    k1, k2 = _k_superoperators(model)
    one = trace_row(d)
    h_row = vectorize(model.hamiltonian).conj()
    dev1 = np.max(np.abs(one @ k1 + 1j * h_row))
    dev2 = np.max(np.abs(one @ k2 - 1j * h_row))
    if max(dev1, dev2) > K_TRACE_TOL:
        raise ConsistencyError(
            f"K-superoperator trace identity violated: {dev1:.3e}, {dev2:.3e}"
        )
    v = vectorize(ss.rho)
    lp = drazin.matrix
    val = one @ (k1 @ (lp @ (k2 @ v))) + one @ (k2 @ (lp @ (k1 @ v)))
    return float(-4.0 * val.real)


def tur_report(model, *, bound_slack=BOUND_SLACK):
    """Compute every TurReport field and assert the three bound invariants.

    A violated invariant raises BoundViolation carrying the full diagnostics;
    sub-errors (NonUniqueSteadyState, CurrentVanishes, ...) propagate.
    """
    liou = build_liouvillian(model)
    ss = steady_state(liou)
    dz = drazin_inverse(liou, ss)
    j = require_nonzero_current(mean_current_analytic(model, ss))
    noise = noise_analytic(model, ss, dz)
    sigma = entropy_production_rate(model, ss)
    psi = coherence_factor_psi(model, ss, dz)
    ups = dynamical_activity(model, ss)
    psi_cap = coherence_correction_psi_cap(model, ss, dz)
    qfi = qfi_rate(model, ss)
    slow = sigma_lower_bound(model, ss)
    report = TurReport(
        J=j,
        D=noise,
        sigma=sigma,
        psi=psi,
        upsilon=ups,
        psi_cap=psi_cap,
        qfi_rate=qfi,
        tur_lhs=noise * sigma / j**2,
        coherence_bound=2.0 * (1.0 + psi) ** 2,
        xi_bound=sigma / (ups + psi_cap),
        classical_bound=2.0,
        sigma_lower=slow,
    )
    diag = report.__dict__
    if report.tur_lhs < report.coherence_bound - bound_slack:
        raise BoundViolation("D*sigma/J^2 >= 2(1+psi)^2", report.tur_lhs, report.coherence_bound, diag)
    if report.sigma < report.sigma_lower - bound_slack:
        raise BoundViolation("sigma >= sigma_lower", report.sigma, report.sigma_lower, diag)
    if report.qfi_rate > report.sigma / 2 + bound_slack:
        raise BoundViolation("qfi_rate <= sigma/2", report.sigma / 2, report.qfi_rate, diag)
    return report
