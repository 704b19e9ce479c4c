"""Full counting statistics: tilted generator, CGF, mean current J, noise D,
and the deformed-ensemble sensitivity.

The counted observable is N(tau) = sum over jumps of nu_k.  J and D are the
first two scaled cumulants; analytic expressions use the Drazin inverse while
the numeric route differentiates the dominant eigenvalue of the tilted
generator.
"""
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import (
    BranchCrossing,
    ConsistencyError,
    CurrentVanishes,
    PreconditionError,
    StepError,
)
from .superop import (
    SuperOperator,
    build_liouvillian,
    sandwich,
    trace_row,
    vectorize,
)

CHI_STEP = 1e-3
THETA_STEP = 1e-5
BRANCH_GUARD = 1e-8
IMAG_TOL = 1e-10
CURRENT_TOL = 1e-12


@dataclass(frozen=True)
class CumulantEstimates:
    """J and D with the method and finite-difference steps that produced them."""

    J: float
    D: float
    method: str  # analytic | numeric-cgf | monte-carlo
    chi_step: float | None = None
    theta_step: float | None = None


def current_superoperator(model):
    """J_op: rho -> sum_k nu_k L_k rho L_k^dag."""
    d = model.dim
    m = np.zeros((d * d, d * d), dtype=np.complex128)
    for ch in model.channels:
        if ch.nu != 0:
            m += ch.nu * np.kron(ch.jump.conj(), ch.jump)
    return SuperOperator(d, m)


def tilted_liouvillian(model, chi):
    """L_chi = L + sum_k (exp(i nu_k chi) - 1) * sandwich(L_k, L_k^dag)."""
    d = model.dim
    m = np.array(build_liouvillian(model).matrix)
    for ch in model.channels:
        if ch.nu != 0:
            m += (np.exp(1j * ch.nu * chi) - 1.0) * np.kron(ch.jump.conj(), ch.jump)
    return SuperOperator(d, m)


def cgf_dominant_eigenvalue(model, chi, *, guard=BRANCH_GUARD):
    """Dominant-real-part eigenvalue of the tilted generator.

    Raises BranchCrossing when the two largest real parts are within guard of
    each other, since the analytic branch through zeta(0)=0 is then ambiguous.
    """
    eigvals = np.linalg.eigvals(tilted_liouvillian(model, chi).matrix)
    order = np.argsort(eigvals.real)[::-1]
    dom = eigvals[order[0]]
    if len(order) > 1:
        sep = dom.real - eigvals[order[1]].real
        if sep < guard:
            raise BranchCrossing(chi, float(sep))
    return complex(dom)


def mean_current_analytic(model, ss):
    """J = Tr{J_op rho_s}."""
    val = trace_row(model.dim) @ (current_superoperator(model).matrix @ vectorize(ss.rho))
    if abs(val.imag) > IMAG_TOL:
        raise ConsistencyError(f"mean current has imaginary residue {val.imag:.3e}")
    return float(val.real)


def noise_analytic(model, ss, drazin):
    """D = sum_k nu_k^2 Tr{L_k rho_s L_k^dag} - 2 Tr{J_op L+ J_op rho_s}."""
    d = model.dim
    one = trace_row(d)
    v = vectorize(ss.rho)
    jop = current_superoperator(model).matrix
    static = 0.0 + 0.0j
    for ch in model.channels:
        if ch.nu != 0:
            static += ch.nu**2 * (one @ (np.kron(ch.jump.conj(), ch.jump) @ v))
    val = static - 2.0 * (one @ (jop @ (drazin.matrix @ (jop @ v))))
    if abs(val.imag) > IMAG_TOL:
        raise ConsistencyError(f"noise has imaginary residue {val.imag:.3e}")
    out = float(val.real)
    if out < -1e-9:
        raise ConsistencyError(f"noise is negative beyond tolerance: {out:.3e}")
    return out


def cumulants_numeric(model, chi_step=CHI_STEP):
    """J and D from central differences of the CGF at chi = 0."""
    if not (chi_step > 0) or chi_step < 1e-15:
        raise StepError(f"chi_step {chi_step!r} unusable")
    zp = cgf_dominant_eigenvalue(model, chi_step)
    zm = cgf_dominant_eigenvalue(model, -chi_step)
    z0 = cgf_dominant_eigenvalue(model, 0.0)
    j = -1j * (zp - zm) / (2 * chi_step)
    dd = -(zp - 2 * z0 + zm) / chi_step**2
    if abs(j.imag) > 1e-8 or abs(dd.imag) > 1e-8:
        raise ConsistencyError(
            f"CGF derivatives carry imaginary residue: J {j.imag:.3e}, D {dd.imag:.3e}"
        )
    return CumulantEstimates(J=float(j.real), D=float(dd.real), method="numeric-cgf", chi_step=chi_step)


def _deformed_model_matrix(model, theta, chi, weights):
    """Tilted generator of the model with jumps scaled to sqrt(1 + ell_k theta) L_k."""
    d = model.dim
    eye = np.eye(d)
    h = model.hamiltonian
    m = -1j * (np.kron(eye, h) - np.kron(h.T, eye))
    for ch, ell in zip(model.channels, weights):
        scale = 1.0 + ell * theta
        if scale < 0:
            raise StepError(f"deformation 1 + ell*theta = {scale:.3e} negative; reduce theta")
        lk = ch.jump
        n = lk.conj().T @ lk
        m += scale * (
            np.exp(1j * ch.nu * chi) * np.kron(lk.conj(), lk)
            - 0.5 * np.kron(eye, n)
            - 0.5 * np.kron(n.T, eye)
        )
    return m


def deformed_mean_sensitivity(model, ss, theta_step=THETA_STEP, tau=None, *, chi_step=CHI_STEP):
    """Central theta-difference of E_theta[N(tau)] under L_k -> sqrt(1+ell_k theta) L_k.

    E_theta[N(tau)] = -i d/dchi Tr[exp(L_{theta,chi} tau) rho_s] at chi = 0,
    evaluated by matrix exponential and central differences in chi, then
    differenced centrally in theta.  The initial state is rho_s of the
    undeformed model.  Requires tau >= 50/spectral_gap.
    """
    from .tur import ell_weights  # local import, tur depends on this module too

    if tau is None or not np.isfinite(tau):
        raise PreconditionError("tau must be a finite horizon")
    gap = ss.spectral_gap
    if gap <= 0 or tau < 50.0 / gap:
        raise PreconditionError(f"tau {tau!r} below long-time regime 50/gap = {50.0/gap if gap > 0 else np.inf!r}")
    if not (theta_step > 0) or theta_step < 1e-12:
        raise StepError(f"theta_step {theta_step!r} unusable")
    if not (chi_step > 0) or chi_step < 1e-15:
        raise StepError(f"chi_step {chi_step!r} unusable")
    weights = ell_weights(model, ss)
    one = trace_row(model.dim)
    v = vectorize(ss.rho)

    def mean_count(theta):
        # conjugation symmetry of the chi-characteristic function makes the
        # central chi-difference equal Im f(chi)/chi with one exponential
        fp = one @ (scipy.linalg.expm(_deformed_model_matrix(model, theta, chi_step, weights) * tau) @ v)
        fm = one @ (scipy.linalg.expm(_deformed_model_matrix(model, theta, -chi_step, weights) * tau) @ v)
        val = -1j * (fp - fm) / (2 * chi_step)
        if abs(val.imag) > 1e-6:
            raise ConsistencyError(f"deformed mean has imaginary residue {val.imag:.3e}")
        return val.real

    return float((mean_count(theta_step) - mean_count(-theta_step)) / (2 * theta_step))


def require_nonzero_current(j, tol=CURRENT_TOL):
    """Raise CurrentVanishes if |J| <= tol; returns J unchanged."""
    if abs(j) <= tol:
        raise CurrentVanishes(j)
    return j
