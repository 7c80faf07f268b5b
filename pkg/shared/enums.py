"""
Enumerations for listing engines, output modes and recursion stages.
"""
from enum import Enum, auto


class Engine(Enum):
    """Listing engines that produce LIST(n)."""
    RECURSIVE = "recursive"  # Gen / RevGen, O(1)-amortized
    GREEDY = "greedy"        # Greedy search with a visited set


class OutputMode(Enum):
    """What the gen command writes per step."""
    TREES = "trees"  # One serialized tree per line, t_n lines
    MOVES = "moves"  # One edge move per line, t_n - 1 lines
    BOTH = "both"    # Move line followed by the resulting tree line


class Stage(Enum):
    """Stage of LIST(n) that a tree belongs to (n >= 5)."""
    S1 = auto()      # LIST(n-1) with v_n v_{n-1} added
    S2 = auto()      # REVLIST(n-1) with v_n v_inf added
    S3 = auto()      # LIST(n-2) with both v_n edges, no variable edge
    S3_VAR = auto()  # As S3, v_{n-2} v_{n-1} standing in for v_{n-2} v_inf
    S4 = auto()      # Tail of REVLIST(n-2) with both v_n edges
