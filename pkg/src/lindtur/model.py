"""Model containers: jump channels with counting/entropy metadata and the Lindblad model.

A channel k may carry a reverse partner k' (thermal pair obeying local detailed
balance L_k = exp(ds_k/2) L_k'^dag) or stand alone (reverse_index None, meaning
the reverse flux is identically zero).
"""
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, ValidationError

HERMITICITY_TOL = 1e-12
LDB_TOL = 1e-10


def _as_complex_matrix(a, name):
    # order="C": the float64 reinterpretation below needs a contiguous last axis
    m = np.array(a, dtype=np.complex128, order="C")
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"{name} must be a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(np.float64))):
        raise ValidationError(f"{name} contains NaN or Inf entries")
    m.setflags(write=False)
    return m


@dataclass(frozen=True)
class CountingChannel:
    """One jump operator with its counting weight and environment entropy step.

    jump           d x d complex matrix, units sqrt(rate)
    nu             integer counting weight
    delta_s        environment entropy step per jump (k_B = 1)
    reverse_index  index of the reversed channel in the parent model, or None
    """

    jump: np.ndarray
    nu: int
    delta_s: float
    reverse_index: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "jump", _as_complex_matrix(self.jump, "jump operator"))
        object.__setattr__(self, "nu", int(self.nu))
        object.__setattr__(self, "delta_s", float(self.delta_s))
        if not np.isfinite(self.delta_s):
            raise ValidationError("delta_s must be finite")


@dataclass(frozen=True)
class LindbladModel:
    """Hamiltonian plus jump channels, all of one Hilbert dimension d.

    Construction validates dimensions, Hermiticity of H, reciprocal reverse
    pairing, and the pair antisymmetry nu_k = -nu_k', ds_k = -ds_k'.  With
    enforce_ldb=True the local-detailed-balance relation
    L_k = exp(ds_k/2) L_k'^dag is checked entrywise to 1e-10.
    """

    hamiltonian: np.ndarray
    channels: tuple
    labels: tuple = ()
    enforce_ldb: bool = False

    def __post_init__(self):
        h = _as_complex_matrix(self.hamiltonian, "hamiltonian")
        if np.max(np.abs(h - h.conj().T)) > HERMITICITY_TOL:
            raise ValidationError("hamiltonian is not Hermitian within 1e-12")
        object.__setattr__(self, "hamiltonian", h)
        chans = tuple(self.channels)
        d = h.shape[0]
        for i, ch in enumerate(chans):
            if not isinstance(ch, CountingChannel):
                raise ValidationError(f"channel {i} is not a CountingChannel")
            if ch.jump.shape != (d, d):
                raise DimensionError(
                    f"channel {i} has shape {ch.jump.shape}, model dimension is {d}"
                )
        object.__setattr__(self, "channels", chans)
        labels = tuple(self.labels) if self.labels else tuple(f"L{i+1}" for i in range(len(chans)))
        if len(labels) != len(chans):
            raise ValidationError("labels length must match channel count")
        object.__setattr__(self, "labels", labels)
        self._check_pairing()
        if self.enforce_ldb:
            self._check_ldb()

    def _check_pairing(self):
        for i, ch in enumerate(self.channels):
            j = ch.reverse_index
            if j is None:
                continue
            if not (0 <= j < len(self.channels)):
                raise ValidationError(f"channel {i} reverse_index {j} out of range")
            partner = self.channels[j]
            if partner.reverse_index != i:
                raise ValidationError(f"channels {i} and {j} are not reciprocally paired")
            if ch.nu != -partner.nu:
                raise ValidationError(f"paired channels {i},{j} need nu_k = -nu_k'")
            if abs(ch.delta_s + partner.delta_s) > 1e-12:
                raise ValidationError(f"paired channels {i},{j} need ds_k = -ds_k'")

    def _check_ldb(self):
        for i, ch in enumerate(self.channels):
            j = ch.reverse_index
            if j is None:
                continue
            partner = self.channels[j]
            # a zero operator (bath population 0) has no finite entropy step
            if np.all(ch.jump == 0) or np.all(partner.jump == 0):
                continue
            dev = np.max(np.abs(ch.jump - np.exp(ch.delta_s / 2) * partner.jump.conj().T))
            if dev > LDB_TOL:
                raise ValidationError(
                    f"local detailed balance broken for channels {i},{j}: max deviation {dev:.3e}"
                )

    @property
    def dim(self):
        return self.hamiltonian.shape[0]

    def jump_operators(self):
        return [ch.jump for ch in self.channels]
