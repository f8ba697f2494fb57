"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a function is defined."""


class EvaluationError(ArithmeticError):
    """A numerical kernel produced a non-finite value where none was expected."""
