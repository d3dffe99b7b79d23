"""Exception hierarchy shared across the package."""


class RelcharError(Exception):
    """Base class for all package errors."""


class GroupFormatError(RelcharError, ValueError):
    """A group description document is malformed."""


class NotABijectionError(GroupFormatError):
    def __init__(self, row: int, point: int):
        self.row = row
        self.point = point
        super().__init__(f"generator row {row} is not a bijection: point {point} repeated")


class GuardExceeded(RelcharError):
    """A configured size guard blocked a computation."""

    def __init__(self, what: str, limit: int, reached: int):
        self.what = what
        self.limit = limit
        self.reached = reached
        super().__init__(f"{what} guard exceeded: limit {limit}, reached {reached}")


class NotASubgroupError(RelcharError, ValueError):
    pass


class NotNormalError(RelcharError, ValueError):
    pass


class UnknownGroupError(RelcharError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown group"


class ImplementationDefect(RelcharError, AssertionError):
    """An internal consistency check failed; this is always a bug."""
