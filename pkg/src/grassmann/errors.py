"""Exception hierarchy shared by all modules."""


class GrassmannError(Exception):
    """Base class for all library errors."""


class MismatchError(GrassmannError):
    """Operands live over different generator counts or different fields."""


class ParseError(GrassmannError):
    """Malformed element text or field descriptor."""


class ValidationError(GrassmannError):
    """A defining relation or structural invariant failed.

    ``violations`` is a list of short machine-readable tags, e.g.
    ``("square", 1)`` or ``("cross", 1, 2)``.
    """

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class DomainError(GrassmannError):
    """Input is outside the operation's domain (e.g. zero element, non-normal)."""


class LimitError(GrassmannError):
    """A configured size cap would be exceeded."""
