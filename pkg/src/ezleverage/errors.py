"""Exception hierarchy shared by every module of the package."""


class EZError(Exception):
    """Base class for all errors raised by ezleverage."""


class InvalidMarket(EZError, ValueError):
    pass


class InvalidPreference(EZError, ValueError):
    pass


class NoWellPosedSolution(EZError, ValueError):
    """The unconstrained consumption rate eta is not positive."""


class InvalidLeverage(EZError, ValueError):
    pass


class NegativeWealth(EZError, ValueError):
    pass


class DomainError(EZError, ValueError):
    pass


class ConstraintNotBinding(EZError, ValueError):
    """The proportional bound is at or above the Merton ratio."""


class BadGrid(EZError, ValueError):
    pass


class SingularSystem(EZError, ArithmeticError):
    """The discretised policy-evaluation system lost diagonal dominance."""


class NotConverged(EZError, RuntimeError):
    """Policy iteration stopped before meeting its tolerances.

    The best iterate is attached as ``field`` and the per-iteration
    history as ``diagnostics``.
    """

    def __init__(self, message, field=None, diagnostics=None):
        super().__init__(message)
        self.field = field
        self.diagnostics = diagnostics or {}


class StructureViolation(EZError, RuntimeError):
    pass


class InadmissiblePolicy(EZError, ValueError):
    pass


class PicardNotConverged(EZError, RuntimeError):
    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate
