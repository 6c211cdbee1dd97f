"""Exception types shared across the package.

Everything derives from ValueError so callers that do not care about the
distinction can catch one type.  The CLI maps ScalarFormatError /
FormatError / FieldMismatchError to exit code 2 (bad input) and axiom or
isomorphism violations, reported through CheckReport, to exit code 1.
"""


class ScalarFormatError(ValueError):
    """A scalar literal could not be parsed for the given field."""


class FieldMismatchError(ValueError):
    """Two operands or structures live over different fields."""


class DimensionMismatchError(ValueError):
    """Dimensions of maps, spaces or tensors do not line up."""


class SingularMatrixError(ValueError):
    """A matrix that must be invertible (e.g. an antipode) is singular."""


class CapExceededError(ValueError):
    """Materialization was requested for a handle larger than the cap."""


class UnverifiedActionError(ValueError):
    """A builder received an action that fails its module(-algebra) axioms."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class FormatError(ValueError):
    """A JSON document does not match the structure-constant schema."""
