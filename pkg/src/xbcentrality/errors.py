"""Exception hierarchy shared across the package."""


class XBError(Exception):
    """Base class for all errors raised by xbcentrality."""


class GraphFormatError(XBError, ValueError):
    """Edge-list text could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(XBError, ValueError):
    """The graph has more than one connected component."""


class InvalidVertexSetError(XBError, ValueError):
    """A vertex set violates its preconditions (empty, not proper, unknown ids)."""


class PathCountOverflow(XBError, OverflowError):
    """A shortest-path count or centrality value does not fit in 64 unsigned bits."""


class GuardExceeded(XBError):
    """An enumeration guard (subset size, path cap, set count) was exceeded."""


class UnreachableError(XBError, ValueError):
    """A target vertex cannot be reached from the source."""


class DegenerateSampleSpace(XBError, ValueError):
    """Fewer than two vertices remain outside the target set."""


class UndefinedCorrelation(XBError, ValueError):
    """Correlation is undefined because an input column is constant."""
