"""
Greedy pivot Gray code search.

From a start tree, repeatedly apply the smallest edge move (pivot, then
removed endpoint, then added endpoint) that yields a spanning tree not seen
before, and stop when there is none. Pivots are the path vertices v_2 .. v_n
unless hub pivots are switched on. Started from P_n this reproduces LIST(n)
under either rule, but it needs a visited set of t_n bitsets, so it serves as
a cross-check for the recursive engine rather than a generator for large n.
"""

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Set, Tuple

from fan.graph import edge_index
from fan.tree import EdgeMove, SpanningTree, candidate_moves, is_valid_tree_move
from shared.constants import GREEDY_WARN_N
from shared.errors import NotASpanningTreeError
from shared.logging_config import get_logger


logger = get_logger(__name__)


@dataclass
class GreedyState:
    """
    Progress of one greedy run.

    Attributes:
        current: Tree most recently emitted (mutated by each move)
        visited: Membership bitsets of every emitted tree
        emitted: Number of trees emitted
        hub_pivot: Whether the hub may serve as a pivot (tried last)
    """

    current: SpanningTree
    visited: Set[int] = field(default_factory=set)
    emitted: int = 0
    hub_pivot: bool = False

    @classmethod
    def start(cls, tree: SpanningTree, hub_pivot: bool = False) -> "GreedyState":
        """
        Begin a run at a copy of tree, which counts as emitted.

        Raises:
            NotASpanningTreeError: If tree is not a spanning tree of F_n
        """
        if not tree.is_spanning_tree():
            raise NotASpanningTreeError(f"greedy start {tree!r} is not a spanning tree")
        if tree.n > GREEDY_WARN_N:
            logger.warning(
                "greedy search on F_%d keeps every visited tree in memory", tree.n
            )
        current = tree.copy()
        return cls(current=current, visited={current.bits}, emitted=1, hub_pivot=hub_pivot)

    def advance(self, move: EdgeMove) -> None:
        """Apply a move returned by next_greedy_move and record the new tree."""
        self.current.swap_edge(*move)
        self.visited.add(self.current.bits)
        self.emitted += 1


def _bits_after(tree: SpanningTree, move: EdgeMove) -> int:
    n = tree.n
    removed = move.removed_edge
    added = move.added_edge
    return tree.bits ^ (1 << edge_index(n, *removed)) ^ (1 << edge_index(n, *added))


def next_greedy_move(state: GreedyState) -> Optional[EdgeMove]:
    """
    Smallest move from the current tree to an unvisited spanning tree.

    Returns:
        The move, or None once every reachable tree has been visited
    """
    tree = state.current
    visited = state.visited
    for move in candidate_moves(tree, hub_pivot=state.hub_pivot):
        if _bits_after(tree, move) in visited:
            continue
        if is_valid_tree_move(tree, move):
            return move
    return None


def iter_greedy(
    start: SpanningTree, limit: Optional[int] = None, hub_pivot: bool = False
) -> Iterator[Tuple[Optional[EdgeMove], SpanningTree]]:
    """
    Stream Greedy(start) as (move, tree) pairs, beginning with (None, start).

    The tree is the live working copy and changes on the next step.

    Args:
        start: Spanning tree to start from
        limit: Stop after this many trees (None runs to exhaustion)
        hub_pivot: Let the hub serve as a pivot after every path vertex
    """
    state = GreedyState.start(start, hub_pivot=hub_pivot)
    if limit is not None and limit <= 0:
        return
    try:
        yield None, state.current
        while limit is None or state.emitted < limit:
            move = next_greedy_move(state)
            if move is None:
                break
            state.advance(move)
            yield move, state.current
    finally:
        logger.debug("greedy from %r: %d trees", start, state.emitted)


def greedy_listing(
    start: SpanningTree, limit: Optional[int] = None, hub_pivot: bool = False
) -> List[SpanningTree]:
    """
    Greedy(start): the start tree and every tree the greedy search reaches.

    Raises:
        NotASpanningTreeError: If start is not a spanning tree
    """
    return [tree.copy() for _, tree in iter_greedy(start, limit, hub_pivot)]
