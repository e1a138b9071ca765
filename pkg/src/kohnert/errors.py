"""Exception hierarchy shared by every module."""


class KohnertError(Exception):
    pass


class DiagramError(KohnertError, ValueError):
    """Invalid cell coordinates or a diagram outside the configured box."""


class ResourceLimitError(KohnertError):
    """A node or chain-enumeration cap was exceeded."""


class FamilyMismatchError(KohnertError, ValueError):
    pass


class PreconditionError(KohnertError, ValueError):
    pass


class NotPureError(PreconditionError):
    pass


class ShapeError(PreconditionError):
    pass


class UnknownNodeError(KohnertError, KeyError):
    pass


class BoundExceededError(KohnertError, ValueError):
    """Corpus enumeration guard tripped."""


class ParseError(KohnertError, ValueError):
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
