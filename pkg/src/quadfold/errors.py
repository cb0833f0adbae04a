"""Exception hierarchy.

Validation problems derive from ``ValidationError`` and computation
problems from ``ComputationError``; the CLI maps them to exit codes 2 and 3.
"""


class QuadfoldError(Exception):
    """Base class for all library errors."""


class ValidationError(QuadfoldError, ValueError):
    """Input rejected before any computation."""


class ComputationError(QuadfoldError, ArithmeticError):
    """A well-formed input for which the requested quantity does not exist."""


class InvalidSides(ValidationError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class MixedGeometry(ValidationError):
    pass


class NotElliptic(ValidationError):
    pass


class NotDegenerate(ValidationError):
    pass


class DegenerateKind(ValidationError):
    pass


class NonElliptic(ValidationError):
    pass


class ConicInput(ValidationError):
    pass


class ModulusOutOfRange(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class NoClosing(ComputationError):
    pass


class DegeneratePivot(ComputationError):
    pass


class DegenerateAxis(ComputationError):
    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class OffCurve(ComputationError):
    pass


class IndeterminateFraction(ComputationError):
    pass


class DegenerateLeading(ComputationError):
    pass


class DegenerateDenominator(ComputationError):
    pass


class PoleAt(ComputationError):
    pass


class RecursionPole(ComputationError):
    pass


class NoMatch(ComputationError):
    pass


class ConstructionFailed(ComputationError):
    pass


class NoIntersection(ComputationError):
    pass
