"""Column-stacking vectorization, superoperator assembly, steady states, Drazin inverse.

Conventions: vec(rho)[i + d*j] = rho[i, j] (column stacking), so
vec(A rho B) = (B^T kron A) vec(rho) and the trace functional is the row
vector <1| = vec(I_d)^dag.  All generators are dense d^2 x d^2 complex
matrices; the target scale is d <= 10.
"""
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConditioningWarning,
    ConsistencyError,
    DimensionError,
    NonUniqueSteadyState,
    PositivityViolation,
    ValidationError,
)

# module defaults, overridable per call
RESIDUAL_TOL = 1e-9
POSITIVITY_TOL = 1e-9
KERNEL_REL_TOL = 1e-6      # kernel cut: |lambda| < gap * this
KERNEL_ABS_FLOOR = 1e-10   # times max |lambda|
PINV_RCOND = 1e-12
COND_LIMIT = 1e12
TRACE_ROW_TOL = 1e-8


@dataclass(frozen=True)
class SuperOperator:
    """A d^2 x d^2 matrix acting on column-stacked density matrices."""

    dim: int
    matrix: np.ndarray
    note: str | None = None

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.complex128)
        d = int(self.dim)
        if m.shape != (d * d, d * d):
            raise DimensionError(f"superoperator for dim {d} must be {d*d}x{d*d}, got {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dim", d)

    def apply(self, rho):
        """Return the matrix devectorize(matrix @ vec(rho))."""
        return devectorize(self.matrix @ vectorize(rho), self.dim)


@dataclass(frozen=True)
class SteadyState:
    """Stationary density matrix with solver diagnostics."""

    rho: np.ndarray
    residual_norm: float
    kernel_dim: int
    spectral_gap: float


def vectorize(rho):
    """Column-stack a square matrix into a length-d^2 vector."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DimensionError(f"vectorize needs a square matrix, got shape {rho.shape}")
    return np.array(rho, dtype=np.complex128).flatten(order="F")


def devectorize(v, d):
    """Inverse of vectorize."""
    v = np.asarray(v)
    if v.ndim != 1 or v.size != d * d:
        raise DimensionError(f"devectorize needs length {d*d}, got shape {v.shape}")
    return np.array(v, dtype=np.complex128).reshape((d, d), order="F")


def trace_row(d):
    """The trace functional <1| = vec(I_d)^dag as a length-d^2 row vector."""
    return vectorize(np.eye(d)).conj()


def sandwich(a, b):
    """SuperOperator realizing rho -> A rho B, i.e. B^T kron A."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"sandwich A must be square, got {a.shape}")
    if b.shape != a.shape:
        raise DimensionError(f"sandwich B shape {b.shape} != A shape {a.shape}")
    return SuperOperator(a.shape[0], np.kron(b.T, a))


def hamiltonian_part(model):
    """The commutator superoperator rho -> -i[H, rho]."""
    h = model.hamiltonian
    d = h.shape[0]
    eye = np.eye(d)
    return SuperOperator(d, -1j * (np.kron(eye, h) - np.kron(h.T, eye)))


def dissipator_part(model):
    """Sum of dissipators rho -> sum_k L_k rho L_k^dag - (1/2){L_k^dag L_k, rho}."""
    d = model.dim
    eye = np.eye(d)
    m = np.zeros((d * d, d * d), dtype=np.complex128)
    for ch in model.channels:
        lk = ch.jump
        n = lk.conj().T @ lk
        m += np.kron(lk.conj(), lk) - 0.5 * np.kron(eye, n) - 0.5 * np.kron(n.T, eye)
    return SuperOperator(d, m)


def build_liouvillian(model):
    """Full generator -i[H, .] + sum_k D(L_k, .); trace row annihilates it."""
    d = model.dim
    m = hamiltonian_part(model).matrix + dissipator_part(model).matrix
    op = SuperOperator(d, m)
    row = trace_row(d) @ m
    dev = np.max(np.abs(row))
    if dev > TRACE_ROW_TOL:
        raise ConsistencyError(f"trace-preservation row violated: max |<1|L| = {dev:.3e}")
    return op


def _kernel_split(eigvals):
    """Count kernel eigenvalues and return (kernel_dim, spectral_gap).

    Two passes: an absolute floor max|lambda| * 1e-10 seeds the nonzero set,
    then the gap-relative cut |lambda| < gap * 1e-6 recounts.  The gap is the
    smallest |Re lambda| over nonzero eigenvalues.
    """
    mags = np.abs(eigvals)
    top = mags.max() if mags.size else 0.0
    if top == 0.0:
        return len(eigvals), 0.0
    floor = top * KERNEL_ABS_FLOOR
    nonzero = mags > floor
    if not np.any(nonzero):
        return len(eigvals), 0.0
    gap = np.min(np.abs(eigvals[nonzero].real))
    cut = max(gap * KERNEL_REL_TOL, floor)
    kernel = mags <= cut
    k = int(np.count_nonzero(kernel))
    if np.any(~kernel):
        gap = np.min(np.abs(eigvals[~kernel].real))
    return max(k, 1), float(gap)


def steady_state(op, *, residual_tol=RESIDUAL_TOL, positivity_tol=POSITIVITY_TOL):
    """Solve L rho = 0 by dense eigendecomposition of the generator.

    Picks the eigenvector nearest eigenvalue 0, Hermitizes and trace-normalizes
    it, and falls back to an SVD null vector if the residual is above
    tolerance.  Raises NonUniqueSteadyState for kernel dimension != 1 and
    PositivityViolation for eigenvalues below -positivity_tol.
    """
    if not isinstance(op, SuperOperator):
        raise DimensionError("steady_state expects a SuperOperator")
    m = op.matrix
    d = op.dim
    row = trace_row(d) @ m
    if np.max(np.abs(row)) > TRACE_ROW_TOL:
        raise ValidationError("generator is not trace-preserving; refusing to solve")
    eigvals, eigvecs = np.linalg.eig(m)
    kernel_dim, gap = _kernel_split(eigvals)
    if kernel_dim != 1:
        raise NonUniqueSteadyState(kernel_dim)
    v = eigvecs[:, np.argmin(np.abs(eigvals))]
    rho = _accept(v, d)
    residual = float(np.max(np.abs(m @ vectorize(rho))))
    if residual > residual_tol:
        # eig can be inaccurate for defective generators; SVD null vector is sturdier
        _, _, vh = np.linalg.svd(m)
        rho = _accept(vh[-1].conj(), d)
        residual = float(np.max(np.abs(m @ vectorize(rho))))
        if residual > residual_tol:
            raise ConsistencyError(f"steady-state residual {residual:.3e} above {residual_tol:.1e}")
    evals = np.linalg.eigvalsh(rho)
    if evals.min() < -positivity_tol:
        raise PositivityViolation(float(evals.min()))
    rho.setflags(write=False)
    return SteadyState(rho=rho, residual_norm=residual, kernel_dim=kernel_dim, spectral_gap=gap)


def _accept(v, d):
    rho = devectorize(v, d)
    rho = (rho + rho.conj().T) / 2
    tr = np.trace(rho).real
    if abs(tr) < 1e-14:
        raise ConsistencyError("null vector has vanishing trace; cannot normalize")
    return rho / tr


def drazin_inverse(op, ss, *, rcond=PINV_RCOND, cond_limit=COND_LIMIT):
    """Group/Drazin inverse via the Moore-Penrose pseudoinverse.

    L+ = (I - P) pinv(L) (I - P) with P = vec(rho_s) <1|.  Singular values
    below max(s) * rcond are dropped.  If the retained singular spectrum has
    condition above cond_limit a ConditioningWarning is emitted and noted on
    the result.
    """
    m = op.matrix
    d = op.dim
    proj = np.outer(vectorize(ss.rho), trace_row(d))
    q = np.eye(d * d) - proj
    u, s, vh = np.linalg.svd(m)
    keep = s > (s[0] * rcond if s.size and s[0] > 0 else np.inf)
    note = None
    if np.any(keep):
        cond = s[keep].max() / s[keep].min()
        if cond > cond_limit:
            note = f"restricted-range condition {cond:.3e} above {cond_limit:.1e}"
            warnings.warn(note, ConditioningWarning)
    inv_s = np.where(keep, 1.0 / np.where(keep, s, 1.0), 0.0)
    pinv = (vh.conj().T * inv_s) @ u.conj().T
    return SuperOperator(d, q @ pinv @ q, note=note)
