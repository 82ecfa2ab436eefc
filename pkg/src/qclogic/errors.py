"""Exception hierarchy shared by every qclogic module."""


class QCLError(Exception):
    """Base class for all qclogic errors."""


class InvalidArgumentError(QCLError, ValueError):
    pass


class InvalidStateError(QCLError, ValueError):
    """A vector violates the norm requirement of the operation."""


class ResourceLimitError(QCLError):
    pass


class ParseError(QCLError, ValueError):
    """Formula text could not be parsed.

    ``position`` is the 0-based character offset where the problem was found.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class MissingAssignmentError(QCLError, LookupError):
    def __init__(self, name: str):
        super().__init__(f"atom {name!r} has no assigned qubit")
        self.name = name


class NotTruthFunctionalError(QCLError, ValueError):
    pass
