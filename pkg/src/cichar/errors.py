"""Shared exception types."""


class StructureError(ValueError):
    """Operands or arguments violate a structural contract.

    Raised for mismatched rings or ambients, wrong codimension, and
    failed preconditions on user input.
    """


class NonUnitError(StructureError):
    """Attempt to invert a truncated series whose constant term vanishes."""


class PropertyViolation(ArithmeticError):
    """A divisibility or integrality property that should always hold failed.

    The offending exact value is kept in ``value`` so callers can report it.
    """

    def __init__(self, message, value=None):
        super().__init__(message)
        self.value = value


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; this signals a bug, not bad input."""
