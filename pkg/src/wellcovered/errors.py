class WellCoveredError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgument(WellCoveredError, ValueError):
    """An argument violates an operation's precondition."""


class CapacityError(WellCoveredError):
    """A size cap (universe, canonicalization, enumeration) was exceeded."""


class Graph6ParseError(WellCoveredError, ValueError):
    """A graph6 string is malformed."""

    def __init__(self, message: str, offset: int | None = None, line: int | None = None):
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
