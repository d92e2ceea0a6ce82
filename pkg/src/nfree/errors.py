"""Exception hierarchy shared by every module of the package."""


class PosetError(ValueError):
    """Base class for invalid input or misuse of a poset operation."""


class CycleError(PosetError):
    pass


class UnknownElement(PosetError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class DuplicateElement(PosetError):
    pass


class InvalidLabel(PosetError):
    pass


class NotACoverEdge(PosetError):
    pass


class InvalidScript(PosetError):
    pass


class BoundExceeded(PosetError):
    pass


class ParseError(PosetError):
    """Malformed poset document; carries a 1-based line and column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class MinimalityViolation(AssertionError):
    """Raised by the brute-force oracle when a theorem instance fails."""
