"""Exception types shared across modules.

Degeneracy errors mean an input lies outside the domain where an operation is
defined; they are expected during random sampling and are not bugs.
"""


class NonInvertible(ZeroDivisionError):
    """Division by a zero or non-unit element."""


class FieldMismatch(TypeError):
    """Operands belong to different fields."""


class NoRoot(ValueError):
    """The requested square root does not exist in the field."""


class Degenerate(ValueError):
    """Base class for inputs outside an operation's domain."""


class IdenticalLines(Degenerate):
    pass


class NonGenericFrame(Degenerate):
    pass


class DuplicateLines(Degenerate):
    pass


class DegenerateOperator(Degenerate):
    pass


class DegenerateRealization(Degenerate):
    pass


class NotEquivalent(Degenerate):
    pass


class LinearSolveDegenerate(Degenerate):
    pass


class ChartSingular(Degenerate):
    pass


class IndeterminacyPoint(Degenerate):
    pass


class NoLift(Degenerate):
    pass


class UnsupportedDegree(ValueError):
    pass


class CertificationFailed(AssertionError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class UnknownCase(KeyError):
    pass
