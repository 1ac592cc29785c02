"""Exception hierarchy shared across the package.

Keeping parse failures and precondition failures distinct lets the CLI
map them to stable exit codes without inspecting messages.
"""


class TwocstError(Exception):
    """Base class for all package-specific errors."""


class ParseError(TwocstError, ValueError):
    """Raised when an instance file or weight token cannot be parsed."""


class PreconditionError(TwocstError, ValueError):
    """Raised when an input violates a documented precondition of an
    algorithm (wrong size, forbidden weight range, missing argument)."""


class MemoryBudgetError(PreconditionError):
    """Raised before allocating a dense table that would exceed the
    configured memory budget."""
