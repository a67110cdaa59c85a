"""Exception types shared across the package."""


class QuiverhomError(Exception):
    """Base class for package errors."""


class PreconditionError(QuiverhomError):
    """An operation refused to run because a stated precondition fails
    (e.g. field too small, missing Gorenstein certificate)."""


class ParseError(QuiverhomError):
    """Bad input file; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
