"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class PoleError(DomainError):
    """Evaluation requested at a pole."""


class CertificationError(ArithmeticError):
    """A computed quantity failed its own consistency certificate.

    Raised, for instance, when a character sum that must be real carries an
    imaginary part above tolerance. It always indicates a bug, never a
    precision shortfall that could be silently truncated.
    """


class BudgetError(DomainError):
    """No truncation parameters could meet the requested accuracy."""
