"""Steady states, counting statistics, and uncertainty bounds for Lindblad generators."""
from .errors import (
    BoundViolation,
    BranchCrossing,
    ConditioningWarning,
    ConfigError,
    ConsistencyError,
    CurrentVanishes,
    DegenerateRate,
    DimensionError,
    LindturError,
    NonUniqueSteadyState,
    PositivityViolation,
    PreconditionError,
    SimulationError,
    StepError,
    ValidationError,
)
from .fcs import (
    CumulantEstimates,
    cgf_dominant_eigenvalue,
    cumulants_numeric,
    current_superoperator,
    deformed_mean_sensitivity,
    mean_current_analytic,
    noise_analytic,
    tilted_liouvillian,
)
from .model import CountingChannel, LindbladModel
from .models import (
    MASER_DEFAULTS,
    ClassicalParams,
    SsdbParams,
    build_classical_reference,
    build_ssdb,
    classical_rate,
)
from .superop import (
    SteadyState,
    SuperOperator,
    build_liouvillian,
    devectorize,
    drazin_inverse,
    steady_state,
    trace_row,
    vectorize,
)
from .trajectories import TrajectoryEnsembleResult, simulate_ensemble
from .tur import (
    TurReport,
    coherence_factor_psi,
    dynamical_activity,
    ell_weights,
    entropy_production_rate,
    coherence_correction_psi_cap,
    qfi_rate,
    sigma_lower_bound,
    tur_report,
)

__version__ = "0.1.0"

__all__ = [
    "BoundViolation",
    "BranchCrossing",
    "ConditioningWarning",
    "ConfigError",
    "ConsistencyError",
    "CountingChannel",
    "CumulantEstimates",
    "CurrentVanishes",
    "ClassicalParams",
    "DegenerateRate",
    "DimensionError",
    "LindbladModel",
    "LindturError",
    "MASER_DEFAULTS",
    "NonUniqueSteadyState",
    "PositivityViolation",
    "PreconditionError",
    "SimulationError",
    "SsdbParams",
    "SteadyState",
    "StepError",
    "SuperOperator",
    "TrajectoryEnsembleResult",
    "TurReport",
    "ValidationError",
    "build_classical_reference",
    "build_liouvillian",
    "build_ssdb",
    "cgf_dominant_eigenvalue",
    "classical_rate",
    "coherence_factor_psi",
    "cumulants_numeric",
    "current_superoperator",
    "deformed_mean_sensitivity",
    "devectorize",
    "drazin_inverse",
    "dynamical_activity",
    "ell_weights",
    "entropy_production_rate",
    "coherence_correction_psi_cap",
    "mean_current_analytic",
    "noise_analytic",
    "qfi_rate",
    "sigma_lower_bound",
    "simulate_ensemble",
    "steady_state",
    "tilted_liouvillian",
    "trace_row",
    "tur_report",
    "vectorize",
]
