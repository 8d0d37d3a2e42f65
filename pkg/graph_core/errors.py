"""
Error types raised by the graph machine packages.
"""

from typing import Optional


class GraphError(ValueError):
    """Base class for every error the machine raises on bad input."""


class EmptyDomain(GraphError):
    """A state with no nodes has no origin to rewrite from."""


class LengthMismatch(GraphError):
    """A successor table does not have one entry per node."""


class OutOfRange(GraphError):
    """A successor entry points outside the node set."""


class ParseError(GraphError):
    """Malformed graph, op or program text."""

    def __init__(self, message: str, line: Optional[int] = None, source: Optional[str] = None):
        self.message = message
        self.line = line
        self.source = source
        super().__init__(self._format())

    def _format(self) -> str:
        where = ""
        if self.source is not None:
            where += f"{self.source}:"
        if self.line is not None:
            where += f"{self.line}:"
        return f"{where} {self.message}" if where else self.message

    def located(self, line: Optional[int] = None, source: Optional[str] = None) -> "ParseError":
        """Return a copy of this error carrying a line number and/or file name."""
        return type(self)(
            self.message,
            line=self.line if line is None else line,
            source=self.source if source is None else source,
        )


class EmptyTarget(ParseError):
    """An op without the assigned label b0."""


class OriginOutOfRange(GraphError):
    """An op names an origin node the state does not have."""

    def __init__(self, origin: int, n: int, op_index: Optional[int] = None):
        self.origin = origin
        self.n = n
        self.op_index = op_index
        where = f"op {op_index}: " if op_index is not None else ""
        super().__init__(f"{where}origin {origin} out of range for {n} nodes")


class AmbiguousCell(GraphError):
    """A boolean cell whose two children coincide cannot hold a value."""


class BoundsExceeded(GraphError):
    """Exhaustive enumeration requested beyond its supported size."""


class RowOutOfRange(ParseError, OutOfRange):
    """A graph text row whose successor lies outside the declared node set."""


class EmptyGraphText(ParseError, EmptyDomain):
    """A graph text header declaring zero nodes."""
