"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Raised when an input fails a documented domain check."""
