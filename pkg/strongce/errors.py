"""Exception hierarchy for strongce"""
from typing import Any, List, Optional


class StrongceError(Exception):
    """Base class for every error raised by strongce"""


class GraphError(StrongceError, ValueError):
    """Malformed graph input or an invalid vertex/edge id"""


class ListAssignmentError(StrongceError, ValueError):
    """A list assignment does not match its graph"""


class ColorConflictError(StrongceError, ValueError):
    """A color was assigned while it is not available for the edge"""

    def __init__(self, edge: int, color: int, clashing_edge: Optional[int] = None):
        self.edge = edge
        self.color = color
        self.clashing_edge = clashing_edge
        if clashing_edge is None:
            message = f"color {color} is not in the list of edge {edge}"
        else:
            message = f"color {color} on edge {edge} clashes with edge {clashing_edge}"
        super().__init__(message)


class PreconditionError(StrongceError, ValueError):
    """An operation was called outside its stated preconditions"""


class DegreeTooLargeError(PreconditionError):
    """The graph has a vertex of degree 5 or more"""


class GuaranteeViolation(StrongceError, RuntimeError):
    """A counting guarantee failed; this is a bug, not an input condition"""


class HandlerStuck(StrongceError, RuntimeError):
    """A structure handler met an edge with no available color"""

    def __init__(self, message: str, edge: Optional[int] = None):
        self.edge = edge
        super().__init__(message)


class ExtensionFailed(StrongceError, RuntimeError):
    """A coloring of a maximum-discrepancy set could not be extended"""


class FallbackExhausted(StrongceError, RuntimeError):
    """Both local and global backtracking failed"""

    def __init__(self, message: str, trace: Optional[List[Any]] = None):
        self.trace = list(trace or [])
        super().__init__(message)


class LimitExceeded(StrongceError, RuntimeError):
    """An exact search hit its node or time limit"""


class CoefficientOverflowError(StrongceError, OverflowError):
    """A polynomial coefficient left the signed 64-bit range"""


class FormatError(StrongceError, ValueError):
    """A graph, lists or coloring file could not be parsed"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
