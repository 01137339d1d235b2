"""Exception hierarchy shared by every module of the package."""


class EmbcompError(Exception):
    """Base class for all errors raised by embcomp."""


class ParseError(EmbcompError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.message = message
        self.line = line
        self.column = column


class RingMismatchError(EmbcompError):
    pass


class NotOnVarietyError(EmbcompError):
    """The basepoint does not satisfy the generators to working precision."""


class DependentBasisError(EmbcompError):
    pass


class PreconditionError(EmbcompError):
    pass


class SamplingError(EmbcompError):
    pass


class InconclusiveError(EmbcompError):
    """A degree or sample budget ran out before a verdict was certified."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class IncompleteStaircaseError(InconclusiveError):
    """The g-corner search hit ``max_degree``; ``partial`` holds the corners found."""
