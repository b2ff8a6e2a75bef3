"""Exception types raised across the package."""


class HarmoniaError(Exception):
    """Base class for all package errors."""


class InvalidArgument(HarmoniaError, ValueError):
    """A parameter is outside the accepted range."""


class DomainError(InvalidArgument):
    """An integrand form was requested outside the parameters where it is defined."""


class ParityError(HarmoniaError, ArithmeticError):
    """An exact trigonometric operation would leave the integer lattice."""


class BudgetExceeded(HarmoniaError, RuntimeError):
    """An enumeration would visit more states than the configured budget."""
