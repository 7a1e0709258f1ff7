"""Exception hierarchy shared by all modules."""


class InterlacingError(Exception):
    """Base class for every error raised by this package."""


class DegreeOutOfRangeError(InterlacingError, IndexError):
    pass


class InvalidTableError(InterlacingError, ValueError):
    pass


class InvalidParameterError(InterlacingError, ValueError):
    """Parameters outside a family's validity range.

    ``reason`` is a short machine-readable code, e.g. ``"orthogonality-range"``.
    """

    def __init__(self, message, reason="invalid-parameter"):
        super().__init__(message)
        self.reason = reason


class InadmissibleError(InvalidParameterError):
    """Valid family parameters for which the extra points are not real."""

    def __init__(self, message, reason="inadmissible"):
        super().__init__(message, reason)


class ComplexRootsError(InadmissibleError):
    pass


class DiscriminantNegativeError(ComplexRootsError):
    pass


class NumericalFailureError(InterlacingError, ArithmeticError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class RealizationError(InterlacingError, ArithmeticError):
    """A polynomial that should be real came out with a large imaginary part."""


class ArityError(InterlacingError, ValueError):
    pass


class OrderingError(InterlacingError, ValueError):
    pass


class DegenerateConfigurationError(InterlacingError, ValueError):
    pass


class HypothesisError(DegenerateConfigurationError):
    """The mixed relation's sign hypotheses fail, so no interlacing claim applies."""

    def __init__(self, message, reason):
        super().__init__(message)
        self.reason = reason
