"""Exception hierarchy shared by the whole package."""


class AinftyError(Exception):
    """Base class for all errors raised by this package."""


class InputError(AinftyError, ValueError):
    """A caller handed an operation an argument that violates its contract."""


class ParseError(InputError):
    """A structure file is malformed; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
