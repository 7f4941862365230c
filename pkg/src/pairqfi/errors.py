"""Exception types shared across the package."""


class PairQfiError(Exception):
    """Base class for all package-specific errors."""


class QuadratureError(PairQfiError):
    """Quadrature did not converge within the refinement cap."""

    def __init__(self, message, last_estimate=None, previous_estimate=None):
        super().__init__(message)
        self.last_estimate = last_estimate
        self.previous_estimate = previous_estimate


class OverlapVanishesError(PairQfiError):
    """The state overlap is numerically zero; phase derivatives are undefined."""


class DegenerateSpectrumError(PairQfiError):
    """The two density-operator eigenvalues coincide; eigenvector coefficients blow up."""


class SingularMatrixError(PairQfiError):
    """The information matrix is singular and cannot be inverted."""


class PupilFormatError(PairQfiError):
    """A sampled-pupil file does not conform to the pupil-grid v1 format."""
