"""Exception types shared across the package."""


class DomainError(ValueError):
    """A point, exponent, or pair of arguments is outside an operation's domain."""


class PreconditionError(ValueError):
    """Inputs are well formed but violate a documented contract."""


class SizeLimitError(ValueError):
    """An exhaustive routine was asked to enumerate past its size guard."""
