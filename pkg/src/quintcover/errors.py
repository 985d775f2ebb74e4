"""Exception hierarchy. Each domain error carries the name the CLI reports."""

from __future__ import annotations


class QuintCoverError(Exception):
    """Base class for every domain error raised by the package."""

    code = "error"


class InvalidInputError(QuintCoverError, ValueError):
    code = "invalid-input"


class DegenerateQuadraticError(InvalidInputError):
    code = "degenerate-quadratic"


class MixedExtensionError(InvalidInputError):
    code = "mixed-extension"


class ExcludedParameterError(QuintCoverError, ValueError):
    """Raised when parameters hit a factor the construction must avoid."""

    code = "excluded-parameter"

    def __init__(self, message: str, factor: str | None = None):
        super().__init__(message)
        self.factor = factor


class IdentityViolationError(QuintCoverError):
    code = "identity-violation"

    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual


class InvalidRootError(QuintCoverError, ValueError):
    code = "invalid-root"


class ConstructionFailureError(QuintCoverError):
    code = "construction-failure"


class SingularModelError(QuintCoverError):
    code = "singular-model"


class DegenerateSubcoverError(QuintCoverError):
    code = "degenerate-subcover"


class J2ZeroError(QuintCoverError, ZeroDivisionError):
    code = "j2-zero"


class PrecisionError(QuintCoverError):
    code = "precision"


class NotOnLocusError(QuintCoverError, ValueError):
    code = "not-on-locus"


class AmbiguityError(QuintCoverError):
    code = "ambiguity"

    def __init__(self, message: str, candidates=None):
        super().__init__(message)
        self.candidates = candidates
