"""Exception types raised across the package."""


class TwoSpinError(Exception):
    """Base class for every error this package raises on bad input."""


class NonHermitianInput(TwoSpinError):
    """Matrix handed to a Hermitian-only routine is not Hermitian."""


class NotNormalized(TwoSpinError):
    """State vector does not have unit norm within tolerance."""


class DegenerateCoupling(TwoSpinError):
    """Exchange coupling J = 0; the manifold coordinates are undefined."""


class NonCommutingGenerators(TwoSpinError):
    """Generator pair fails to commute; variance formula does not apply."""


class StepOutOfRange(TwoSpinError):
    """Finite-difference step outside the supported window."""


class AngleOutOfRange(TwoSpinError):
    """Bloch angle outside its domain."""


class BadRange(TwoSpinError):
    """Malformed sweep range."""
