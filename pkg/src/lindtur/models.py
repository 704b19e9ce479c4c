"""Built-in models: driven three-level maser and its classical reference.

Basis order is (|x>, |c>, |h>) = (ground, coupled-to-cold, coupled-to-hot),
indices (0, 1, 2), so the density-matrix components stack as
(rho_xx, rho_cc, rho_hh, rho_ch, rho_hc, ...) under column vectorization.

Counting convention (recorded in every CSV header): only the cold-bath pair is
counted, nu = +1 for emission into the cold bath (|x> -> |c> jump operator
sigma_cx) and nu = -1 for absorption from it; the hot pair carries nu = 0.
"""
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateRate, ValidationError
from .model import CountingChannel, LindbladModel

X, C, H = 0, 1, 2


@dataclass(frozen=True)
class SsdbParams:
    """Maser parameters: bath couplings, populations, drive amplitude, detuning."""

    gamma_h: float
    gamma_c: float
    n_h: float
    n_c: float
    omega_drive_amp: float
    detuning: float

    def __post_init__(self):
        for name in ("gamma_h", "gamma_c", "n_h", "n_c", "omega_drive_amp", "detuning"):
            v = getattr(self, name)
            object.__setattr__(self, name, float(v))
            if not math.isfinite(getattr(self, name)):
                raise ValidationError(f"{name} must be finite, got {v!r}")
        if self.gamma_h <= 0 or self.gamma_c <= 0:
            raise ValidationError("bath couplings gamma_h, gamma_c must be positive")
        if self.n_h < 0 or self.n_c < 0:
            raise ValidationError("bath populations n_h, n_c must be nonnegative")


@dataclass(frozen=True)
class ClassicalParams(SsdbParams):
    """Same fields; the classical transition rate gamma is derived, not supplied."""


# default operating point used throughout the docs and acceptance checks
MASER_DEFAULTS = SsdbParams(
    gamma_h=0.1, gamma_c=2.0, n_h=5.0, n_c=0.027, omega_drive_amp=0.15, detuning=0.0
)


def _ketbra(i, j):
    m = np.zeros((3, 3), dtype=np.complex128)
    m[i, j] = 1.0
    return m


def _thermal_channels(p):
    """The four bath channels shared by both models.

    Entropy steps are forced by local detailed balance: the absorption jump at
    rate gamma*n and the emission jump at rate gamma*(n+1) are mutual reverses
    with |ds| = ln((n+1)/n); n = 0 keeps the absorption channel as a zero
    operator with ds = 0 (its flux is identically zero).
    """
    ds_h = math.log((p.n_h + 1) / p.n_h) if p.n_h > 0 else 0.0
    ds_c = math.log((p.n_c + 1) / p.n_c) if p.n_c > 0 else 0.0
    return [
        CountingChannel(np.sqrt(p.gamma_h * p.n_h) * _ketbra(X, H), nu=0, delta_s=-ds_h, reverse_index=1),
        CountingChannel(np.sqrt(p.gamma_h * (p.n_h + 1)) * _ketbra(H, X), nu=0, delta_s=+ds_h, reverse_index=0),
        CountingChannel(np.sqrt(p.gamma_c * p.n_c) * _ketbra(X, C), nu=-1, delta_s=-ds_c, reverse_index=3),
        CountingChannel(np.sqrt(p.gamma_c * (p.n_c + 1)) * _ketbra(C, X), nu=+1, delta_s=+ds_c, reverse_index=2),
    ]


def build_ssdb(p):
    """Driven maser: H = -Delta sigma_cc + Omega (sigma_ch + sigma_hc), four bath channels."""
    h = (
        -p.detuning * _ketbra(C, C)
        + p.omega_drive_amp * (_ketbra(C, H) + _ketbra(H, C))
    )
    return LindbladModel(
        hamiltonian=h,
        channels=tuple(_thermal_channels(p)),
        labels=("hot_abs", "hot_emit", "cold_abs", "cold_emit"),
        enforce_ldb=True,
    )


def classical_rate(p):
    """gamma = 2 Omega^2 Gamma / (Delta^2 + Gamma^2), Gamma = (gamma_h n_h + gamma_c n_c)/2."""
    big_gamma = (p.gamma_h * p.n_h + p.gamma_c * p.n_c) / 2.0
    denom = p.detuning**2 + big_gamma**2
    if denom == 0.0:
        raise DegenerateRate("classical rate undefined: Gamma = 0 and Delta = 0")
    return 2.0 * p.omega_drive_amp**2 * big_gamma / denom


def build_classical_reference(p):
    """Incoherent reference: H = 0, thermal channels plus rate-gamma c<->h hopping.

    The hopping pair replaces the coherent drive (a work source), so it
    carries nu = 0 and ds = 0; entropy production then counts heat only.
    """
    gam = classical_rate(p)
    channels = _thermal_channels(p) + [
        CountingChannel(np.sqrt(gam) * _ketbra(C, H), nu=0, delta_s=0.0, reverse_index=5),
        CountingChannel(np.sqrt(gam) * _ketbra(H, C), nu=0, delta_s=0.0, reverse_index=4),
    ]
    return LindbladModel(
        hamiltonian=np.zeros((3, 3)),
        channels=tuple(channels),
        labels=("hot_abs", "hot_emit", "cold_abs", "cold_emit", "work_ch", "work_hc"),
        enforce_ldb=True,
    )
