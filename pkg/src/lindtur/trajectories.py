"""Quantum-jump Monte Carlo used as an independent statistical oracle for J and D.

Pure states evolve under H_eff = H - (i/2) sum_k L_k^dag L_k; a uniform draw u
sets the next jump time through bisection on the squared-norm decay (the decay
is monotone, so the bracket [0, remaining time] either contains the crossing
or no jump occurs before tau).  Jump channel k is selected with probability
proportional to ||L_k phi||^2 and contributes nu_k to the count N.
"""
from dataclasses import dataclass

import numba
import numpy as np

from .errors import PreconditionError, SimulationError, StepError, ValidationError
from .superop import build_liouvillian, steady_state

BISECT_REL_TOL = 1e-8  # waiting-time tolerance, times tau
MAX_BISECT = 200


@dataclass(frozen=True)
class TrajectoryEnsembleResult:
    """Ensemble statistics of N(tau)/tau over independent trajectories."""

    n_traj: int
    tau: float
    mean_rate: float
    var_rate: float
    se_mean: float
    se_var: float
    seed: int


@numba.njit(cache=True)
def _run_trajectories(seeds, smat, sinv, evals, jumps, nus, p0, v0, tau, bis_tol, max_iter):
    n = seeds.shape[0]
    d = smat.shape[0]
    nchan = jumps.shape[0]
    counts = np.zeros(n, np.int64)
    status = 0
    for m in range(n):
        np.random.seed(seeds[m])
        # initial pure state from the steady-state eigenensemble
        u0 = np.random.random()
        acc = 0.0
        pick = d - 1
        for i in range(d):
            acc += p0[i]
            if u0 < acc:
                pick = i
                break
        phi = v0[:, pick].copy()
        coef = sinv @ phi
        t = 0.0
        total = 0
        while True:
            u = np.random.random()
            hi = tau - t
            z = smat @ (np.exp(-1j * evals * hi) * coef)
            if (z.conj() * z).real.sum() > u:
                break  # survives to tau without another jump
            lo = 0.0
            it = 0
            while hi - lo > bis_tol:
                it += 1
                if it > max_iter:
                    status = 1
                    break
                mid = 0.5 * (lo + hi)
                z = smat @ (np.exp(-1j * evals * mid) * coef)
                if (z.conj() * z).real.sum() > u:
                    lo = mid
                else:
                    hi = mid
            if status != 0:
                break
            tj = 0.5 * (lo + hi)
            phi = smat @ (np.exp(-1j * evals * tj) * coef)
            w = np.empty(nchan)
            tot = 0.0
            for k in range(nchan):
                zk = jumps[k] @ phi
                w[k] = (zk.conj() * zk).real.sum()
                tot += w[k]
            r = np.random.random() * tot
            acc = 0.0
            pick = nchan - 1
            for k in range(nchan):
                acc += w[k]
                if r < acc:
                    pick = k
                    break
            zk = jumps[pick] @ phi
            nrm = np.sqrt((zk.conj() * zk).real.sum())
            phi = zk / nrm
            coef = sinv @ phi
            total += nus[pick]
            t += tj
        if status != 0:
            break
        counts[m] = total
    return counts, status


def simulate_ensemble(model, tau, n_traj, seed):
    """Run n_traj independent counting trajectories of duration tau.

    Deterministic for fixed (model, tau, n_traj, seed): per-trajectory RNG
    streams come from np.random.SeedSequence(seed).  Requires a unique steady
    state and tau >= 20/spectral_gap; a channel-free model returns all-zero
    statistics immediately.
    """
    n_traj = int(n_traj)
    if n_traj < 1:
        raise ValidationError(f"n_traj must be >= 1, got {n_traj}")
    tau = float(tau)
    if not np.isfinite(tau) or tau <= 0:
        raise PreconditionError(f"tau must be positive and finite, got {tau!r}")
    if len(model.channels) == 0:
        return _summarize(np.zeros(n_traj, np.int64), n_traj, tau, seed)
    ss = steady_state(build_liouvillian(model))
    gap = ss.spectral_gap
    if gap <= 0 or tau < 20.0 / gap:
        raise PreconditionError(f"tau {tau!r} below 20/gap = {20.0/gap if gap > 0 else np.inf!r}")
    bis_tol = BISECT_REL_TOL * tau
    if bis_tol <= 0:
        raise StepError("waiting-time tolerance underflowed")

    heff = model.hamiltonian - 0.5j * sum(
        ch.jump.conj().T @ ch.jump for ch in model.channels
    )
    evals, smat = np.linalg.eig(heff)
    sinv = np.linalg.inv(smat)
    pvals, pvecs = np.linalg.eigh(ss.rho)
    p0 = np.clip(pvals, 0.0, None)
    p0 = p0 / p0.sum()

    seeds = np.random.SeedSequence(seed).generate_state(n_traj).astype(np.int64)
    counts, status = _run_trajectories(
        seeds,
        smat.astype(np.complex128),
        sinv.astype(np.complex128),
        evals.astype(np.complex128),
        np.array([ch.jump for ch in model.channels], dtype=np.complex128),
        np.array([ch.nu for ch in model.channels], dtype=np.int64),
        p0.astype(np.float64),
        pvecs.astype(np.complex128),
        tau,
        bis_tol,
        MAX_BISECT,
    )
    if status != 0:
        raise SimulationError("waiting-time bisection failed to converge")
    return _summarize(counts, n_traj, tau, seed)


def _summarize(counts, n_traj, tau, seed):
    mean = counts.mean()
    if n_traj >= 2:
        dev = counts - mean
        s2 = np.sum(dev**2) / (n_traj - 1)
        se_mean = np.sqrt(s2 / n_traj) / tau
        # fourth-moment standard error of the sample variance; counting
        # distributions are not Gaussian enough for the s^2 sqrt(2/(n-1)) rule
        m4 = np.mean(dev**4)
        se_var = np.sqrt(max(m4 - s2**2 * (n_traj - 3) / (n_traj - 1), 0.0) / n_traj) / tau
    else:
        s2, se_mean, se_var = 0.0, 0.0, 0.0
    return TrajectoryEnsembleResult(
        n_traj=n_traj,
        tau=tau,
        mean_rate=float(mean / tau),
        var_rate=float(s2 / tau),
        se_mean=float(se_mean),
        se_var=float(se_var),
        seed=int(seed),
    )
