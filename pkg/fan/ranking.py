"""
Counting, ranking and unranking of LIST(n).

t_n, the number of spanning trees of F_n, is the Fibonacci number
f_{2(n-1)}. A tree's rank follows from which stage of Gen(n, 1, 0) produced
it, decided by the edges v_n v_{n-1}, v_n v_inf, v_{n-2} v_inf and
v_{n-2} v_{n-1}; each step peels one or two vertices off the tree, so both
directions take O(n) arithmetic steps on integers up to t_{n-1}.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from fan.codec import parse_tree
from fan.graph import HUB, VertexLabel, check_n, edge_index
from fan.tree import SpanningTree
from shared.constants import BASE_CASE_MAX_N, FIB_TABLE_DEFAULT_N, FIRST_PATH_LABEL
from shared.enums import Stage
from shared.errors import NotASpanningTreeError, RankOutOfRangeError


@dataclass
class FibTable:
    """
    Fibonacci numbers f_0, f_1, f_2, ... with f_1 = f_2 = 1.

    Attributes:
        values: values[i] is f_i; grows on demand
    """

    values: List[int] = field(default_factory=lambda: [0, 1, 1])

    def __post_init__(self):
        self.ensure(2 * (FIB_TABLE_DEFAULT_N - 1))

    def ensure(self, i: int) -> None:
        """Extend the table through f_i."""
        values = self.values
        while len(values) <= i:
            values.append(values[-1] + values[-2])

    def fib(self, i: int) -> int:
        self.ensure(i)
        return self.values[i]

    def tree_count(self, n: int) -> int:
        """t_n = f_{2(n-1)}."""
        check_n(n)
        return self.fib(2 * (n - 1))


_FIB = FibTable()


def tree_count(n: int) -> int:
    """
    Number of spanning trees of F_n, exactly.

    Raises:
        NTooSmallError: If n < 2
    """
    return _FIB.tree_count(n)


# LIST(2), LIST(3), LIST(4) as produced by Gen; rank i is entry i-1
BASE_LISTINGS: Dict[int, Tuple[str, ...]] = {
    2: ("2,inf",),
    3: ("2,3;2,inf", "2,inf;3,inf", "2,3;3,inf"),
    4: (
        "2,3;2,inf;3,4",
        "2,inf;3,4;3,inf",
        "2,3;3,4;3,inf",
        "2,3;3,inf;4,inf",
        "2,inf;3,inf;4,inf",
        "2,3;2,inf;4,inf",
        "2,inf;3,4;4,inf",
        "2,3;3,4;4,inf",
    ),
}

_BASE_BITS: Dict[int, List[int]] = {
    k: [parse_tree(k, text).bits for text in texts] for k, texts in BASE_LISTINGS.items()
}
_BASE_RANKS: Dict[int, Dict[int, int]] = {
    k: {bits: rank for rank, bits in enumerate(listing, start=1)}
    for k, listing in _BASE_BITS.items()
}


def _spoke_bit(n: int, k: int) -> int:
    """Bit of edge {k, inf} in F_n's indexing."""
    return 1 << edge_index(n, k, HUB)


def _edge_bit(n: int, lo: VertexLabel, hi: VertexLabel) -> int:
    return 1 << edge_index(n, lo, hi)


def _stage(n: int, bits: int, k: int, sub_bit: int) -> Stage:
    """
    Stage of LIST(k) holding the level-k view of a tree.

    The view keeps the edges among v_2..v_k and the hub, with sub_bit
    standing in for {k, inf}.
    """
    has_e1 = bool(bits & _edge_bit(n, k - 1, k))
    has_e2 = bool(bits & sub_bit)
    if has_e1 and not has_e2:
        return Stage.S1
    if has_e2 and not has_e1:
        return Stage.S2
    if bits & _spoke_bit(n, k - 2):
        return Stage.S4
    if bits & _edge_bit(n, k - 2, k - 1):
        return Stage.S3_VAR
    return Stage.S3


def _base_view(n: int, bits: int, k: int, sub_bit: int) -> int:
    """Level-k view of a tree as an F_k bitset, for k <= 4."""
    low_edges = (1 << 2 * (k - FIRST_PATH_LABEL)) - 1  # every edge with lo < k
    view = bits & low_edges
    if bits & sub_bit:
        view |= 1 << edge_index(k, k, HUB)
    return view


def stage_of(n: int, tree: SpanningTree) -> Stage:
    """
    Stage of LIST(n) that produced a tree (n >= 5).

    Raises:
        NotASpanningTreeError: If tree is not a spanning tree of F_n
        ValueError: If n < 5, where the listing has no stage structure
    """
    _check_tree(n, tree)
    if n <= BASE_CASE_MAX_N:
        raise ValueError(f"stages are defined for n > {BASE_CASE_MAX_N}, got {n}")
    return _stage(n, tree.bits, n, _spoke_bit(n, n))


def _check_tree(n: int, tree: SpanningTree) -> None:
    check_n(n)
    if tree.n != n or not tree.is_spanning_tree():
        raise NotASpanningTreeError(f"{tree!r} is not a spanning tree of F_{n}")


def rank(n: int, tree: SpanningTree) -> int:
    """
    1-indexed position of a tree in LIST(n).

    Args:
        n: Number of vertices
        tree: A spanning tree of F_n

    Returns:
        Rank in [1, t_n]

    Raises:
        NotASpanningTreeError: If tree is not a spanning tree of F_n
    """
    _check_tree(n, tree)
    bits = tree.bits
    # The answer is offset + sign * R_k(view) for the current level k
    offset, sign = 0, 1
    k = n
    sub_bit = _spoke_bit(n, n)
    while k > BASE_CASE_MAX_N:
        t1 = tree_count(k - 1)
        t2 = tree_count(k - 2)
        stage = _stage(n, bits, k, sub_bit)
        if stage is Stage.S1:
            k -= 1
            sub_bit = _spoke_bit(n, k)
        elif stage is Stage.S2:
            offset += sign * (2 * t1 + 1)
            sign = -sign
            k -= 1
            sub_bit = _spoke_bit(n, k)
        elif stage is Stage.S4:
            offset += sign * (2 * t1 + 2 * t2 + 1)
            sign = -sign
            k -= 2
            sub_bit = _spoke_bit(n, k)
        elif stage is Stage.S3_VAR:
            offset += sign * 2 * t1
            sub_bit = _edge_bit(n, k - 2, k - 1)
            k -= 2
        else:
            offset += sign * 2 * t1
            k -= 2
            sub_bit = _spoke_bit(n, k)
    return offset + sign * _BASE_RANKS[k][_base_view(n, bits, k, sub_bit)]


def unrank(n: int, r: int) -> SpanningTree:
    """
    The tree at 1-indexed position r of LIST(n).

    The tree is assembled from isolated vertices, two levels at most per
    step. The edge e stands in for {k, inf} at the current level k: after an
    S3 step it is v_k v_{k+1}, the variable edge.

    Raises:
        RankOutOfRangeError: If r is not in [1, t_n]
    """
    check_n(n)
    total = tree_count(n)
    if not 1 <= r <= total:
        raise RankOutOfRangeError(f"rank must be between 1 and {total}, got {r}")
    bits = 0
    k = n
    e_bit = _spoke_bit(n, n)
    while k > BASE_CASE_MAX_N:
        t1 = tree_count(k - 1)
        t2 = tree_count(k - 2)
        e1_bit = _edge_bit(n, k - 1, k)
        if r <= t1:  # S1
            bits |= e1_bit
            k -= 1
            e_bit = _spoke_bit(n, k)
        elif r <= 2 * t1:  # S2
            bits |= e_bit
            r = 2 * t1 - r + 1
            k -= 1
            e_bit = _spoke_bit(n, k)
        elif r <= 2 * t1 + t2:  # S3
            bits |= e1_bit | e_bit
            r -= 2 * t1
            e_bit = _edge_bit(n, k - 2, k - 1)
            k -= 2
        else:  # S4
            bits |= e1_bit | e_bit
            r = 2 * t1 + 2 * t2 - r + 1
            k -= 2
            e_bit = _spoke_bit(n, k)
    base = _BASE_BITS[k][r - 1]
    spoke = 1 << edge_index(k, k, HUB)
    # Edges with lo < k share their index between F_k and F_n
    bits |= base & ~spoke
    if base & spoke:
        bits |= e_bit
    return SpanningTree.from_bits(n, bits)
