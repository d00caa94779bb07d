# models/errors.py


class PoincareError(Exception):
    """Root of every error raised by this package."""


# --------------------------
# Linear algebra
class LinearAlgebraError(PoincareError):
    """Raised when a subspace operation receives incompatible inputs."""

class ContainmentError(LinearAlgebraError):
    """Raised when a subspace is not contained in the ambient it should lie in."""

class AmbientMismatchError(LinearAlgebraError):
    """Raised when two subspaces or vectors live in different ambient spaces."""


# --------------------------
# Algebras
class AlgebraError(PoincareError):
    """Raised when an algebra cannot be built or manipulated."""

class InvalidParametersError(AlgebraError):
    """Raised when (h, s, t, a) fall outside the admitted range."""

class AlgebraMismatchError(AlgebraError):
    """Raised when elements of different algebras are combined."""

class StructureError(AlgebraError):
    """Raised when a multiplication table breaks commutativity, associativity, the unit law or locality."""

class IdealError(AlgebraError):
    """Raised when a quotient is requested by something that is not a proper ideal."""


# --------------------------
# Series / classification / config
class SeriesError(PoincareError):
    """Raised on a zero or non-invertible denominator."""

class ClassificationError(PoincareError):
    """Raised when (e, h) violates e >= h + 1."""

class ConfigError(PoincareError):
    """Raised when environment settings or CLI flags cannot be parsed."""
