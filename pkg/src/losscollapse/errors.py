"""Exception and warning types shared across the package."""


class ParseError(ValueError):
    """A file or spec string could not be parsed. Messages name the offending
    line number or token."""


class ValidationError(ValueError):
    """Input data violates a structural invariant (e.g. non-increasing tokens,
    duplicate (p, seed) pairs). Messages name the offending curve."""


class RangeError(ValueError):
    """A query falls outside the supported range (no extrapolation) or a
    required coverage window is not met."""


class StateError(RuntimeError):
    """An operation needs state that has not been computed yet, e.g. ladder
    horizons before normalization."""


class InsufficientDataError(ValueError):
    """Not enough model sizes, seeds, or points for the requested analysis."""


class DegenerateCurveError(ValueError):
    """A normalization denominator or predictor is non-positive or identically
    zero, so the operation is undefined for this input."""


class FitError(RuntimeError):
    """A fit failed to produce a usable result (flat input, zero predictor
    energy, non-positive exponent)."""


class DivergenceError(RuntimeError):
    """A simulation overflowed. Carries the step at which it happened."""

    def __init__(self, step: int, message: str | None = None):
        self.step = step
        super().__init__(message or f"simulation diverged at step {step}")


class CoverageWarning(UserWarning):
    """A curve ends before its assigned training horizon."""
