"""Exception taxonomy shared across the package.

Input problems (bad syntax, violated preconditions, unknown names) derive
from InputError; computational failures that a caller may want to budget or
retry derive directly from ToolError.
"""


class ToolError(Exception):
    """Base class for every error raised by this package."""


class InputError(ToolError):
    """Malformed input or violated operation precondition."""


class ParseError(InputError):
    """Syntax error in a polynomial expression or input document."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownVariableError(InputError):
    """A referenced variable is not part of the declared variable list."""


class PointNotOnVarietyError(InputError):
    """A supplied point does not satisfy the defining equations."""


class ExactDivisionError(ToolError):
    """Exact polynomial division was requested but leaves a remainder."""


class UnsupportedSizeError(ToolError):
    """An exponent exceeds the supported machine-word range."""


class ResourceLimitError(ToolError):
    """A configured step budget was exhausted before completion."""


class NotZeroDimensionalError(ToolError):
    """An operation requiring a zero-dimensional ideal got something else."""


class ShapePositionError(ToolError):
    """No separating linear form reached shape position within the retry
    budget."""


class DegenerateInputError(ToolError):
    """A derived scheme (singular locus, distance-critical system, fiber)
    is not zero-dimensional, so the requested decision is unavailable."""


class UnsupportedIrrationalError(ToolError):
    """A real singular point has irrational coordinates; exact
    classification at such points is out of scope."""


class NonGenericSpecializationError(ToolError):
    """Residue-degree samples disagree across specialization values."""


class RelationError(InputError):
    """An integral relation is malformed or fails verification."""
