"""Exception types shared across the package."""


class MatrixError(ValueError):
    """Malformed matrix input or an operation on incompatible shapes."""


class SizeGuardError(ValueError):
    """An exponential-cost evaluator refused a matrix above its size bound."""

    def __init__(self, guard, limit, size):
        self.guard = guard
        self.limit = limit
        self.size = size
        super().__init__(
            "%s refuses n=%d (size guard: n <= %d)" % (guard, size, limit))


class NotLowerHessenbergError(MatrixError):
    pass


class ContractionError(MatrixError):
    """Contraction preconditions were violated."""


class NotContractibleError(ValueError):
    """A contraction chain stalled on a matrix too large for any oracle."""


class ValidityFloorError(ValueError):
    """An identity was queried below the smallest order it is stated for."""
