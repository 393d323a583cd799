"""Exception types shared across the package."""


class PavstatsError(Exception):
    """Base class for all errors raised by this package."""


class RangeError(PavstatsError, ValueError):
    """An argument lies outside its documented domain."""


class ResourceCapError(PavstatsError, RuntimeError):
    """A request exceeds a configured size cap."""

    def __init__(self, message: str, cap: int | None = None):
        super().__init__(message)
        self.cap = cap


class UnsupportedPatternError(PavstatsError, ValueError):
    """The requested pattern is outside the supported set for this operation."""


class SaturationError(PavstatsError, ArithmeticError):
    """A numeric routine saturated at its bracket; carries the boundary value."""

    def __init__(self, message: str, boundary_value: float):
        super().__init__(message)
        self.boundary_value = boundary_value


class UndefinedGrowthError(PavstatsError, ArithmeticError):
    """Growth-rate estimation was asked for a sequence with an all-zero tail."""


class InternalConsistencyError(PavstatsError):
    """A redundant internal cross-check failed; indicates a bug, not bad input."""
