"""Exception types raised by the library and mapped to CLI exit codes."""


class CasimirError(Exception):
    """Base class for all library errors."""


class InvalidWeightError(CasimirError, ValueError):
    """A weight has the wrong length or is not dominant where required."""


class UndefinedGeneratorError(CasimirError, ValueError):
    """A monomial generator has more parts than there are coordinates."""


class UnsupportedClassError(CasimirError, ValueError):
    """No closed-form eigenvalue polynomial is tabulated for the class."""


class DomainError(CasimirError, ArithmeticError):
    """A closed-form coefficient has a vanishing denominator at this rank."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class DegenerateReferenceError(CasimirError, ArithmeticError):
    """The reference weight of a cof ratio has a vanishing cof coefficient."""
