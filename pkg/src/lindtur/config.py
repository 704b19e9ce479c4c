"""Flat key = value config files (UTF-8, # comments) for the sweep/scatter runners.

Schema (all keys lowercase; unknown keys rejected):

  kind        ssdb | classical | both          (sweep; scatter ignores it)
  variable    detuning | n_c                   (sweep only)
  lo, hi      sweep range                      (sweep only; default n_c range 0.001..1.0)
  points      grid size >= 1                   (sweep only)
  samples     draw count >= 0                  (scatter only)
  delta_lo, delta_hi, omega_lo, omega_hi       (scatter ranges; defaults -1.5, 1.5, 0.01, 0.8)
  gamma_h, gamma_c, n_h, n_c, omega, detuning  (fixed params; defaults are the
                                                maser operating point 0.1, 2.0, 5.0, 0.027, 0.15, 0.0)
  output      CSV path (required)
  seed        integer (default 0)
  tol.bound_slack                              (tolerance override, optional)
"""
from dataclasses import dataclass, field

from .errors import ConfigError
from .models import ClassicalParams, SsdbParams

N_C_DEFAULT_RANGE = (0.001, 1.0)
DETUNING_DEFAULT_RANGE = (-1.5, 1.5)

_PARAM_KEYS = ("gamma_h", "gamma_c", "n_h", "n_c", "omega", "detuning")
_PARAM_DEFAULTS = {
    "gamma_h": 0.1,
    "gamma_c": 2.0,
    "n_h": 5.0,
    "n_c": 0.027,
    "omega": 0.15,
    "detuning": 0.0,
}
_SWEEP_KEYS = {"kind", "variable", "lo", "hi", "points", "output", "seed", *_PARAM_KEYS}
_SCATTER_KEYS = {
    "samples", "delta_lo", "delta_hi", "omega_lo", "omega_hi",
    "output", "seed", *_PARAM_KEYS,
}


def parse_config(path):
    """Read a key = value file into a dict of strings.  Raises ConfigError."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    out = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{ln}: expected 'key = value', got {raw!r}")
        key, _, val = line.partition("=")
        key = key.strip().lower()
        val = val.strip()
        if not key:
            raise ConfigError(f"{path}:{ln}: empty key")
        if key in out:
            raise ConfigError(f"{path}:{ln}: duplicate key {key!r}")
        out[key] = val
    return out


def _take_float(mapping, key, default=None):
    if key not in mapping:
        if default is None:
            raise ConfigError(f"missing required key {key!r}")
        return float(default)
    try:
        return float(mapping[key])
    except ValueError:
        raise ConfigError(f"key {key!r}: not a number: {mapping[key]!r}") from None


def _take_int(mapping, key, default=None):
    if key not in mapping:
        if default is None:
            raise ConfigError(f"missing required key {key!r}")
        return int(default)
    try:
        return int(mapping[key])
    except ValueError:
        raise ConfigError(f"key {key!r}: not an integer: {mapping[key]!r}") from None


def _split_tolerances(mapping):
    tols = {}
    rest = {}
    for key, val in mapping.items():
        if key.startswith("tol."):
            try:
                tols[key[4:]] = float(val)
            except ValueError:
                raise ConfigError(f"tolerance {key!r}: not a number: {val!r}") from None
        else:
            rest[key] = val
    return tols, rest


def _params_from(mapping, cls):
    kw = {name: _take_float(mapping, name, _PARAM_DEFAULTS[name]) for name in _PARAM_KEYS}
    return cls(
        gamma_h=kw["gamma_h"],
        gamma_c=kw["gamma_c"],
        n_h=kw["n_h"],
        n_c=kw["n_c"],
        omega_drive_amp=kw["omega"],
        detuning=kw["detuning"],
    )


@dataclass(frozen=True)
class SweepConfig:
    kind: str
    params: SsdbParams
    variable: str
    lo: float
    hi: float
    points: int
    output: str
    seed: int = 0
    tolerances: dict = field(default_factory=dict)

    @classmethod
    def from_mapping(cls, mapping):
        tols, mapping = _split_tolerances(dict(mapping))
        unknown = set(mapping) - _SWEEP_KEYS
        if unknown:
            raise ConfigError(f"unknown sweep keys: {sorted(unknown)}")
        kind = mapping.get("kind", "ssdb").lower()
        if kind not in ("ssdb", "classical", "both"):
            raise ConfigError(f"kind must be ssdb|classical|both, got {kind!r}")
        variable = mapping.get("variable", "detuning").lower()
        if variable not in ("detuning", "n_c"):
            raise ConfigError(f"variable must be detuning|n_c, got {variable!r}")
        default_range = DETUNING_DEFAULT_RANGE if variable == "detuning" else N_C_DEFAULT_RANGE
        lo = _take_float(mapping, "lo", default_range[0])
        hi = _take_float(mapping, "hi", default_range[1])
        if not lo < hi:
            raise ConfigError(f"need lo < hi, got {lo!r} >= {hi!r}")
        points = _take_int(mapping, "points")
        if points < 1:
            raise ConfigError(f"points must be >= 1, got {points}")
        if "output" not in mapping or not mapping["output"]:
            raise ConfigError("missing required key 'output'")
        try:
            params = _params_from(mapping, SsdbParams)
        except Exception as exc:
            raise ConfigError(f"invalid fixed parameters: {exc}") from exc
        return cls(
            kind=kind,
            params=params,
            variable=variable,
            lo=lo,
            hi=hi,
            points=points,
            output=mapping["output"],
            seed=_take_int(mapping, "seed", 0),
            tolerances=tols,
        )


@dataclass(frozen=True)
class ScatterConfig:
    params: SsdbParams
    samples: int
    delta_lo: float
    delta_hi: float
    omega_lo: float
    omega_hi: float
    output: str
    seed: int = 0
    tolerances: dict = field(default_factory=dict)

    @classmethod
    def from_mapping(cls, mapping):
        tols, mapping = _split_tolerances(dict(mapping))
        unknown = set(mapping) - _SCATTER_KEYS
        if unknown:
            raise ConfigError(f"unknown scatter keys: {sorted(unknown)}")
        samples = _take_int(mapping, "samples")
        if samples < 0:
            raise ConfigError(f"samples must be >= 0, got {samples}")
        delta_lo = _take_float(mapping, "delta_lo", DETUNING_DEFAULT_RANGE[0])
        delta_hi = _take_float(mapping, "delta_hi", DETUNING_DEFAULT_RANGE[1])
        omega_lo = _take_float(mapping, "omega_lo", 0.01)
        omega_hi = _take_float(mapping, "omega_hi", 0.8)
        if not delta_lo < delta_hi or not omega_lo < omega_hi:
            raise ConfigError("scatter ranges need lo < hi")
        if "output" not in mapping or not mapping["output"]:
            raise ConfigError("missing required key 'output'")
        try:
            params = _params_from(mapping, SsdbParams)
        except Exception as exc:
            raise ConfigError(f"invalid fixed parameters: {exc}") from exc
        return cls(
            params=params,
            samples=samples,
            delta_lo=delta_lo,
            delta_hi=delta_hi,
            omega_lo=omega_lo,
            omega_hi=omega_hi,
            output=mapping["output"],
            seed=_take_int(mapping, "seed", 0),
            tolerances=tols,
        )
