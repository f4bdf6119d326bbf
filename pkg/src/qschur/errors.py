"""Exception types shared across the package."""


class QSchurError(Exception):
    """Base class for all errors raised by qschur."""


class NotComparable(QSchurError, ValueError):
    """The inner shape is not below the outer shape in the relevant poset."""


class ShapeMismatch(QSchurError, ValueError):
    """A filling's domain does not agree with its shape's cell set."""


class InvalidInput(QSchurError, ValueError):
    """A tableau fails the validator required by an operation.

    ``reason`` names the first violated condition when known
    (``"row-decrease"``, ``"first-column"``, ``"triple"``, ``"column-decrease"``).
    """

    def __init__(self, message: str, reason: str | None = None):
        super().__init__(message)
        self.reason = reason


class SizeMismatch(QSchurError, ValueError):
    """Sizes of a shape and a target index disagree."""


class NotSymmetric(QSchurError):
    """A Schur expansion was requested for a non-symmetric skew function."""


class ResourceLimit(QSchurError):
    """An enumeration exceeded its configured size ceiling."""
