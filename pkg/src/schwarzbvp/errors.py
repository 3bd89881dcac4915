"""Exception types shared across the package."""


class SchwarzBVPError(Exception):
    """Base class for all package errors."""


class DomainError(SchwarzBVPError):
    """A point or parameter lies outside the valid domain of an operation."""


class CarrierMismatchError(SchwarzBVPError):
    """A distribution was paired against an object on a different carrier."""


class BoundaryProximityError(SchwarzBVPError):
    """Finite differencing requested too close to the domain boundary."""


class UnsupportedOrderError(SchwarzBVPError):
    """Derivative or operator order beyond the supported range."""


class SingularityMisdeclarationError(SchwarzBVPError):
    """Integrand blew up at a quadrature node not covered by a declared singularity."""


class DivergenceRiskError(SchwarzBVPError):
    """Decay metadata does not guarantee convergence of the requested integral."""


class AdmissibilityError(SchwarzBVPError):
    """Problem data violates an admissibility hypothesis (growth, decay, H_tg0)."""


class SolverError(SchwarzBVPError):
    """A solver could not assemble a solution from the given data."""


class SpecFileError(SchwarzBVPError):
    """Problem spec file violates the schema.  Carries the offending field path."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


class QuadratureToleranceWarning(UserWarning):
    """Refinement budget exhausted before the target tolerance was met."""
