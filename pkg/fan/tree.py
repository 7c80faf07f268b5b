"""
Spanning trees of the fan graph and the edge moves between them.
"""

from dataclasses import dataclass, field
from typing import Iterator, List, NamedTuple, Optional, Tuple

from fan.graph import (
    HUB,
    Edge,
    VertexLabel,
    check_n,
    edge_from_index,
    edge_index,
    fan_neighbors,
    is_edge,
    label_text,
)
from fan.union_find import forms_spanning_tree
from shared.constants import FIRST_PATH_LABEL
from shared.errors import IllegalMoveError, NotAnEdgeError, NotASpanningTreeError


class EdgeMove(NamedTuple):
    """
    Pivot move T - {pivot, removed} + {pivot, added}.

    Tuple order is the move order used by the greedy search: pivot first,
    then removed endpoint, then added endpoint, with the hub largest.
    """
    pivot: VertexLabel
    removed: VertexLabel
    added: VertexLabel

    @property
    def removed_edge(self) -> Edge:
        return Edge.of(self.pivot, self.removed)

    @property
    def added_edge(self) -> Edge:
        return Edge.of(self.pivot, self.added)

    def inverse(self) -> "EdgeMove":
        """The move that undoes this one."""
        return EdgeMove(self.pivot, self.added, self.removed)

    def __str__(self) -> str:
        u = label_text(self.pivot)
        return f"-{u},{label_text(self.removed)} +{u},{label_text(self.added)}"


@dataclass(eq=False)
class SpanningTree:
    """
    An edge set of F_n kept in two synchronized forms.

    Each edge uv is stored once, in the adjacency list of its smaller
    endpoint, so the hub never owns a list and every path vertex owns at most
    two entries. The same edge set is mirrored as a bitset over canonical
    edge indices, which serves as the tree's exact identity.

    Attributes:
        n: Number of vertices of the fan graph (hub included)
        bits: Edge membership bitset, bit i set iff edge i is present
        adjacency: adjacency[u] lists the larger endpoints of edges at u
    """

    n: int
    bits: int = 0
    adjacency: List[List[VertexLabel]] = field(default_factory=list)

    def __post_init__(self):
        check_n(self.n)
        if not self.adjacency:
            self.adjacency = [[] for _ in range(self.n + 1)]
            for lo, hi in self.edges():
                self.adjacency[lo].append(hi)

    @classmethod
    def from_bits(cls, n: int, bits: int) -> "SpanningTree":
        """Create a tree from a membership bitset without validation."""
        return cls(n=n, bits=bits)

    @classmethod
    def from_edges(cls, n: int, edges, validate: bool = True) -> "SpanningTree":
        """
        Create a tree from (u, v) pairs in any orientation.

        Args:
            n: Number of vertices
            edges: Iterable of vertex pairs
            validate: Require the result to be a spanning tree of F_n

        Raises:
            NotAnEdgeError: If a pair is not an edge of F_n
            NotASpanningTreeError: If validate is set and the edges are not a
                spanning tree (including repeated edges)
        """
        check_n(n)
        bits = 0
        count = 0
        for u, v in edges:
            if not is_edge(n, u, v):
                raise NotAnEdgeError(
                    f"{{{label_text(u)},{label_text(v)}}} is not an edge of F_{n}"
                )
            lo, hi = (u, v) if u < v else (v, u)
            bits |= 1 << edge_index(n, lo, hi)
            count += 1
        tree = cls(n=n, bits=bits)
        if validate and (count != n - 1 or not tree.is_spanning_tree()):
            raise NotASpanningTreeError(f"edges do not form a spanning tree of F_{n}")
        return tree

    # --- queries ---

    def has_edge(self, u: VertexLabel, v: VertexLabel) -> bool:
        """Check if {u, v} is in the tree (False for non-edges of F_n)."""
        if not is_edge(self.n, u, v):
            return False
        lo, hi = (u, v) if u < v else (v, u)
        return bool(self.bits >> edge_index(self.n, lo, hi) & 1)

    def edges(self) -> List[Edge]:
        """Edges of the tree in canonical index order."""
        return [edge_from_index(self.n, i) for i in _set_bits(self.bits)]

    def neighbors(self, v: VertexLabel) -> List[VertexLabel]:
        """Tree neighbors of v, ascending."""
        adjacency = self.adjacency
        if v == HUB:
            return [u for u in range(FIRST_PATH_LABEL, self.n + 1) if HUB in adjacency[u]]
        lower = [v - 1] if v > FIRST_PATH_LABEL and v in adjacency[v - 1] else []
        return lower + sorted(adjacency[v])

    def edge_total(self) -> int:
        return self.bits.bit_count()

    def is_spanning_tree(self) -> bool:
        """Check n-1 edges, acyclic and connected."""
        return forms_spanning_tree(self.n, self.edges())

    def is_coherent(self) -> bool:
        """Check that adjacency lists and bitset describe the same edges."""
        bits = 0
        for lo in range(FIRST_PATH_LABEL, self.n + 1):
            stored = self.adjacency[lo]
            if len(stored) > 3 or len(set(stored)) != len(stored):
                return False
            for hi in stored:
                if hi <= lo or not is_edge(self.n, lo, hi):
                    return False
                bits |= 1 << edge_index(self.n, lo, hi)
        return bits == self.bits and not any(self.adjacency[:FIRST_PATH_LABEL])

    @property
    def key(self) -> Tuple[int, int]:
        return (self.n, self.bits)

    # --- updates ---

    def swap_edge(self, u: VertexLabel, old: VertexLabel, new: VertexLabel) -> None:
        """
        Replace {u, old} with {u, new} in both representations.

        No checks; callers guarantee {u, old} is present and {u, new} absent.
        """
        n = self.n
        lo, hi = (u, old) if u < old else (old, u)
        self.adjacency[lo].remove(hi)
        self.bits ^= 1 << edge_index(n, lo, hi)
        lo, hi = (u, new) if u < new else (new, u)
        self.adjacency[lo].append(hi)
        self.bits ^= 1 << edge_index(n, lo, hi)

    def apply_move(self, move: EdgeMove) -> "SpanningTree":
        """
        Apply a move in place.

        Raises:
            IllegalMoveError: If the move's preconditions do not hold
        """
        check_move(self, move)
        self.swap_edge(*move)
        return self

    def copy(self) -> "SpanningTree":
        return SpanningTree(
            n=self.n, bits=self.bits, adjacency=[list(a) for a in self.adjacency]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpanningTree):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"SpanningTree(n={self.n}, edges=[{'; '.join(map(str, self.edges()))}])"


def _set_bits(bits: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def path_tree(n: int) -> SpanningTree:
    """
    The starting tree P_n: the path v_inf, v_2, v_3, ..., v_n.

    Raises:
        NTooSmallError: If n < 2
    """
    check_n(n)
    edges = [(FIRST_PATH_LABEL, HUB)] + [(k, k + 1) for k in range(FIRST_PATH_LABEL, n)]
    return SpanningTree.from_edges(n, edges, validate=False)


def reversed_path_tree(n: int) -> SpanningTree:
    """The path v_inf, v_n, v_{n-1}, ..., v_2."""
    check_n(n)
    edges = [(n, HUB)] + [(k, k + 1) for k in range(FIRST_PATH_LABEL, n)]
    return SpanningTree.from_edges(n, edges, validate=False)


def star_tree(n: int) -> SpanningTree:
    """All n-1 spokes at the hub."""
    check_n(n)
    return SpanningTree.from_edges(
        n, [(k, HUB) for k in range(FIRST_PATH_LABEL, n + 1)], validate=False
    )


def check_move(tree: SpanningTree, move: EdgeMove) -> None:
    """
    Validate a move's preconditions against a tree.

    Raises:
        IllegalMoveError: If removed == added, either pair is not an edge of
            F_n, the removed edge is absent or the added edge is present
    """
    pivot, removed, added = move
    if removed == added:
        raise IllegalMoveError(f"move {move} removes and adds the same edge")
    if not (is_edge(tree.n, pivot, removed) and is_edge(tree.n, pivot, added)):
        raise IllegalMoveError(f"move {move} uses a non-edge of F_{tree.n}")
    if not tree.has_edge(pivot, removed):
        raise IllegalMoveError(f"move {move}: edge {move.removed_edge} is not in the tree")
    if tree.has_edge(pivot, added):
        raise IllegalMoveError(f"move {move}: edge {move.added_edge} is already in the tree")


def apply_move(tree: SpanningTree, move: EdgeMove) -> SpanningTree:
    """
    Return a copy of tree with the move applied.

    The result is not checked to be a tree; see is_valid_tree_move.

    Raises:
        IllegalMoveError: If the move's preconditions do not hold
    """
    check_move(tree, move)
    result = tree.copy()
    result.swap_edge(*move)
    return result


def is_valid_tree_move(tree: SpanningTree, move: EdgeMove) -> bool:
    """
    Check if applying the move to a spanning tree yields a spanning tree.

    Removing {pivot, removed} splits the tree in two; the move is valid iff
    `added` lies on the side of `removed`, away from the pivot. O(n).

    Raises:
        IllegalMoveError: If the move's preconditions do not hold
    """
    check_move(tree, move)
    pivot, removed, added = move
    seen = {removed}
    stack = [removed]
    while stack:
        x = stack.pop()
        for y in tree.neighbors(x):
            if y in seen or (x == removed and y == pivot):
                continue
            if y == added:
                return True
            seen.add(y)
            stack.append(y)
    return False


def compare_moves(a: EdgeMove, b: EdgeMove) -> int:
    """
    Three-way comparison of moves by (pivot, removed, added).

    Returns:
        -1 if a < b, 0 if equal, 1 if a > b
    """
    return (a > b) - (a < b)


def move_between(before: SpanningTree, after: SpanningTree) -> Optional[EdgeMove]:
    """
    Recover the pivot move turning one tree into another.

    Returns:
        The move, or None if the trees do not differ by exactly one removed
        and one added edge sharing an endpoint
    """
    if before.n != after.n:
        return None
    diff = before.bits ^ after.bits
    if diff.bit_count() != 2:
        return None
    first, second = (edge_from_index(before.n, i) for i in _set_bits(diff))
    removed, added = (first, second) if before.bits >> edge_index(before.n, *first) & 1 else (second, first)
    shared = set(removed) & set(added)
    if not shared:
        return None
    pivot = shared.pop()
    return EdgeMove(pivot, removed.other(pivot), added.other(pivot))


def candidate_moves(tree: SpanningTree, hub_pivot: bool = True) -> Iterator[EdgeMove]:
    """
    Every move whose preconditions hold, in ascending move order.

    Pivots run v_2 .. v_n then the hub; for each pivot the removed endpoint
    ascends over tree neighbors, then the added endpoint over F_n neighbors
    outside the tree.

    Args:
        tree: Tree to move from
        hub_pivot: Include moves that pivot on the hub
    """
    n = tree.n
    pivots = list(range(FIRST_PATH_LABEL, n + 1))
    if hub_pivot:
        pivots.append(HUB)
    for pivot in pivots:
        in_tree = tree.neighbors(pivot)
        if not in_tree:
            continue
        outside = [w for w in fan_neighbors(n, pivot) if w not in in_tree]
        for removed in in_tree:
            for added in outside:
                yield EdgeMove(pivot, removed, added)
