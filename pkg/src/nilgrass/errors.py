class ConsistencyError(RuntimeError):
    """An internal invariant failed (e.g. a supposedly exact division left a remainder)."""


class IntegralityError(ConsistencyError):
    """A linear solve over the integers needed a non-integral coefficient."""


class NotInSpanError(ValueError):
    """The element is not an integer combination of the requested basis."""

    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual
