"""Exception types shared across the package."""


class LindturError(Exception):
    """Base class for all package errors."""


class DimensionError(LindturError, ValueError):
    """Matrix or vector shapes do not line up."""


class ValidationError(LindturError, ValueError):
    """Model or parameter construction violates an invariant."""


class ConfigError(LindturError, ValueError):
    """Config file missing, malformed, or semantically invalid."""


class NonUniqueSteadyState(LindturError):
    """Generator kernel has dimension != 1; the steady state is degenerate."""

    def __init__(self, kernel_dim, message=None):
        self.kernel_dim = kernel_dim
        super().__init__(message or f"kernel dimension {kernel_dim}, expected 1")


class PositivityViolation(LindturError):
    """Candidate steady state has an eigenvalue below tolerance."""

    def __init__(self, min_eigenvalue, message=None):
        self.min_eigenvalue = min_eigenvalue
        super().__init__(message or f"negative eigenvalue {min_eigenvalue:.3e}")


class BranchCrossing(LindturError):
    """Two tilted-generator eigenvalues compete for the dominant branch."""

    def __init__(self, chi, separation, message=None):
        self.chi = chi
        self.separation = separation
        super().__init__(
            message
            or f"dominant-branch ambiguity at chi={chi!r}: real-part separation {separation:.3e}"
        )


class CurrentVanishes(LindturError):
    """Mean current is zero within tolerance; current-normalized quantities undefined."""

    def __init__(self, current, message=None):
        self.current = current
        super().__init__(message or f"|J| = {abs(current):.3e} below tolerance")


class BoundViolation(LindturError):
    """A tested inequality failed; carries the offending values for diagnosis."""

    def __init__(self, name, lhs, rhs, diagnostics=None):
        self.name = name
        self.lhs = lhs
        self.rhs = rhs
        self.diagnostics = dict(diagnostics or {})
        super().__init__(f"{name}: {lhs!r} < {rhs!r}")


class PreconditionError(LindturError, ValueError):
    """An argument violates a documented precondition (e.g. horizon vs gap)."""


class StepError(LindturError, ValueError):
    """A finite-difference step is zero, negative, or below representable size."""


class SimulationError(LindturError):
    """Trajectory integration failed (waiting-time bisection underflow)."""


class DegenerateRate(LindturError, ValueError):
    """Derived rate formula hits 0/0 (classical rate with Gamma = 0, Delta = 0)."""


class ConsistencyError(LindturError):
    """Internal cross-check failed (imaginary residue, sign, or trace identity)."""


class ConditioningWarning(UserWarning):
    """Pseudoinverse conditioning on the decaying subspace looks unreliable."""
