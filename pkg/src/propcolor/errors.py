"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed input: bad graph data, ragged lists, unknown names."""


class PreconditionError(ValueError):
    """A documented precondition of an operation does not hold."""


class ResourceCapError(RuntimeError):
    """An enumeration would exceed its configured resource cap.

    ``partial`` carries whatever results were computed before the cap hit
    (e.g. the proportional choice number scan so far).
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class SearchInvariantError(RuntimeError):
    """A step that the underlying counting argument guarantees to succeed
    failed anyway; this always indicates a bug, never bad input."""
