"""Exception types raised across the package."""


class LawClusterError(Exception):
    """Base class for every error raised by lawcluster."""


class EmptyInput(LawClusterError, ValueError):
    pass


class GridMismatch(LawClusterError, ValueError):
    pass


class LengthMismatch(LawClusterError, ValueError):
    pass


class InvalidCount(LawClusterError, ValueError):
    pass


class DirectionCountMismatch(LawClusterError, ValueError):
    pass


class TooFewSets(LawClusterError, ValueError):
    pass


class InvalidDelta(LawClusterError, ValueError):
    pass


class InvalidM(LawClusterError, ValueError):
    pass


class HypothesisViolated(LawClusterError, ValueError):
    """Raised when a bound is requested outside the range where it holds."""


class InvalidConfig(LawClusterError, ValueError):
    pass


class InvalidK(LawClusterError, ValueError):
    pass


class InvalidParameter(LawClusterError, ValueError):
    pass


class LabelMismatch(LawClusterError, ValueError):
    pass


class NonFiniteValue(LawClusterError, ValueError):
    pass


class ParseError(LawClusterError, ValueError):
    """Malformed input file.

    Args:
        message: What went wrong.
        path: File being parsed, if known.
        line: 1-based line number of the offending row, if known.
    """

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}"
            if line is not None:
                where += f":{line}"
            where += ": "
        elif line is not None:
            where = f"line {line}: "
        super().__init__(where + message)
