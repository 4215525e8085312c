"""Exception hierarchy.

Every error raised on purpose by the library derives from ``ParcurveError``.
The ``exit_code`` attribute is what the command line maps it to.
"""


class ParcurveError(Exception):
    exit_code = 2


class DomainError(ParcurveError, ValueError):
    """Parameter outside the curve's domain, or wrong kind of curve."""


class BoundaryError(DomainError):
    """Finite-difference stencil does not fit inside an open curve's domain."""


class RegularityError(ParcurveError, ValueError):
    def __init__(self, message, t=None):
        super().__init__(message)
        self.t = t


class HypothesisError(ParcurveError, ValueError):
    """A theorem's hypothesis (usually the offset distance) does not hold."""


class SimplicityError(ParcurveError, ValueError):
    exit_code = 3


class AccuracyError(ParcurveError, ArithmeticError):
    exit_code = 4

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class PrecisionError(AccuracyError):
    """Rotation index came out visibly non-integral."""


class SamplingError(AccuracyError):
    """Angle unwrapping could not be made safe by refinement."""


class DegenerateOffsetError(HypothesisError):
    pass


class BranchError(HypothesisError):
    pass


class SingularityError(HypothesisError):
    pass


class InflectionError(HypothesisError):
    def __init__(self, message, t=None):
        super().__init__(message)
        self.t = t


class DegeneracyError(ParcurveError, ValueError):
    """Polyline collapses to a point."""
