"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside its mathematically valid domain."""


class DimensionMismatch(ValueError):
    """Operands were built for different Hilbert-space dimensions."""


class SingularStart(RuntimeError):
    """Every random restart produced a numerically singular frame operator."""
