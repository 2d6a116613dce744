"""Exception types raised across the package."""


class CapacityError(ValueError):
    """A register would exceed the configured qubit limit."""


class QubitIndexError(IndexError):
    """A qubit index is outside the register."""


class GateArgumentError(ValueError):
    """A gate was given the wrong number of targets or repeated targets."""


class NormalizationError(ValueError):
    """A state vector is not normalized within tolerance."""


class DegenerateMeasurementError(ValueError):
    """Collapse was requested onto an outcome with zero probability."""


class MembershipError(ValueError):
    """A membership degree lies outside [0, 1]."""


class ArityError(ValueError):
    """Operands have incompatible qubit arities or lengths."""


class UndefinedCorrelationError(ValueError):
    """Pearson correlation is undefined because a vector is constant."""


class IngestionError(ValueError):
    """Input data could not be parsed or validated."""
