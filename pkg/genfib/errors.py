"""Exception hierarchy for genfib.

Every error raised on purpose by the library derives from GenFibError, and
most also derive from the closest builtin so callers can catch either.
"""


class GenFibError(Exception):
    """Base class for all genfib errors."""


class DomainError(GenFibError, ValueError):
    """An argument lies outside the operation's domain (k < 1, alpha < 1, ...)."""


class MismatchedFieldError(GenFibError, ValueError):
    """Binary operation on quadratic elements from different fields."""


class FieldZeroDivisionError(GenFibError, ZeroDivisionError):
    """Division by zero, or zero raised to a negative power."""


class SingularMatrixError(GenFibError, ValueError):
    """Exact inverse requested for a matrix with zero determinant."""


class DegenerateMomentError(GenFibError, ValueError):
    """A leading principal Hankel determinant vanishes."""


class UnknownIdentityError(GenFibError, KeyError):
    """Identity id not present in the registry."""

    def __str__(self) -> str:
        # KeyError quotes its argument; keep the message readable
        return str(self.args[0]) if self.args else ""


class InvalidBindingError(GenFibError, ValueError):
    """Identity instance bindings are missing, extra, or out of range."""


class UnderdeterminedAnsatzError(GenFibError, ValueError):
    """Correction ansatz is empty or has more terms than samples."""


class BoundExceededError(GenFibError, ValueError):
    """A brute-force scan bound is above its desk-scale cap."""


class DescentError(GenFibError, RuntimeError):
    """A descent did not terminate where the proof says it must."""


class VerificationError(GenFibError, AssertionError):
    """Two independent computations of the same quantity disagree."""
