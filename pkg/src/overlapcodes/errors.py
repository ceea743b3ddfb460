"""Error types shared across the package.

Both inherit ValueError so callers that don't care about the distinction can
catch the usual thing. The CLI maps DomainError to exit status 2 and
CapacityError to exit status 3.
"""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class CapacityError(ValueError):
    """The request is valid but exceeds an implementation size/time cap."""
