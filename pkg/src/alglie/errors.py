"""Exception types raised across the package."""


class AlgLieError(Exception):
    """Base class for every domain error raised by :mod:`alglie`."""


class DimensionMismatch(AlgLieError, ValueError):
    pass


class SplitFailure(AlgLieError):
    """A polynomial does not split into linear factors over the rationals.

    ``factor`` holds the part of the polynomial left over after removing
    every rational root.
    """

    def __init__(self, factor, message=None):
        self.factor = factor
        super().__init__(message or f"irrational spectrum unsupported: factor {factor} has no full rational splitting")


class NotSemisimple(AlgLieError):
    pass


class NotNilpotent(AlgLieError):
    pass


class NotClosed(AlgLieError):
    """A subspace was expected to be closed under the commutator bracket."""


class NotInSpan(AlgLieError, ValueError):
    pass


class ParamDomain(AlgLieError, ValueError):
    """Catalog parameters outside the range where the construction is defined."""


class RoundLimitExceeded(AlgLieError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"hull iteration stopped after {report.rounds} rounds without reaching a fixed point")


class NotNilpotentAlgebra(AlgLieError):
    pass
