"""Exception types shared across the library."""


class DomainError(ValueError):
    """An input value lies outside the divergence generator's domain."""


class InvalidKError(ValueError):
    """Requested cluster count is outside [1, n]."""


class NonIntegerInputError(ValueError):
    """An operation requiring integral inputs received non-integers."""


class SizeGuardError(ValueError):
    """A deliberately slow reference routine was called on too large an input."""
