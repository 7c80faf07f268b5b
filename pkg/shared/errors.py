"""
Exception types for fan graph operations.

Every user-facing error is a ValueError so callers can catch bad input the
usual way; the ``code`` attribute carries a stable identifier for the CLI.
"""


class FanGraphError(ValueError):
    """Base class for invalid input to the fan graph library."""
    code = "FanGraphError"


class NTooSmallError(FanGraphError):
    """Vertex count below the smallest fan graph F_2."""
    code = "NTooSmall"


class NotAnEdgeError(FanGraphError):
    """A vertex pair that is not an edge of F_n."""
    code = "NotAnEdge"


class IllegalMoveError(FanGraphError):
    """An edge move whose preconditions do not hold for the tree."""
    code = "IllegalMove"


class NotASpanningTreeError(FanGraphError):
    """An edge set that is not a spanning tree of F_n."""
    code = "NotASpanningTree"


class RankOutOfRangeError(FanGraphError):
    """A rank outside [1, t_n]."""
    code = "RankOutOfRange"


class OracleRangeExceededError(FanGraphError):
    """Brute-force enumeration requested beyond its supported range."""
    code = "OracleRangeExceeded"


class TreeParseError(FanGraphError):
    """Tree text that cannot be parsed."""
    code = "TreeParseError"


class MalformedTokenError(TreeParseError):
    """A vertex or edge token that does not follow the grammar."""
    code = "MalformedToken"


class DuplicateEdgeError(TreeParseError):
    """The same edge listed twice."""
    code = "DuplicateEdge"


class WrongEdgeCountError(TreeParseError):
    """An edge list whose length is not n - 1."""
    code = "WrongEdgeCount"


class GenInvariantBroken(RuntimeError):
    """The recursive generator reached a state its algorithm rules out."""
    code = "GenInvariantBroken"
