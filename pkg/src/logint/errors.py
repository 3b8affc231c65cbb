"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the domain where the quantity is defined or implemented."""


class CapacityError(ValueError):
    """Request beyond a precomputed table."""


class DivergenceError(ValueError):
    """The requested integral does not converge."""
