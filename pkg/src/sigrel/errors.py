"""Exception hierarchy shared by every sigrel module."""

from __future__ import annotations


class SigrelError(Exception):
    """Base class for all errors raised by sigrel."""


class DomainError(SigrelError, ValueError):
    """An operation was applied outside of its mathematical domain."""


class NonConstructibleExact(SigrelError, ArithmeticError):
    """A square root is irrational, so the exact backend cannot represent it."""


class BackendMismatch(SigrelError, TypeError):
    pass


class SuperluminalError(SigrelError, ValueError):
    pass


class FeatureDisabled(SigrelError):
    pass


class NotOnWorldline(SigrelError, ValueError):
    pass


class CalibrationFailure(SigrelError):
    """A seeded witness search ran out of attempts."""


class AnchorMismatch(SigrelError, ValueError):
    pass


class DegenerateLine(SigrelError, ValueError):
    pass


class NotTimelike(SigrelError, ValueError):
    pass


class UnknownAxiom(SigrelError, KeyError):
    pass


# formula toolkit


class FormulaSyntaxError(SigrelError, ValueError):
    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        self.message = message
        if pos is not None:
            message = f"{message} (at offset {pos})"
        super().__init__(message)


class SortError(SigrelError, TypeError):
    pass


class MissingDefinition(SigrelError, KeyError):
    pass


class UnassignedVariable(SigrelError, KeyError):
    pass


class NotEquivalence(SigrelError, ValueError):
    pass
