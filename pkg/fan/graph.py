"""
Vertex labels and edges of the fan graph F_n.

F_n joins a hub vertex v_inf to every vertex of the path v_2, v_3, ..., v_n.
Path vertices are plain ints; the hub is the int HUB, which compares greater
than every finite label, so tuple ordering of labels, edges and moves is the
ordering the listings are defined by.
"""

import sys
from functools import lru_cache
from typing import List, NamedTuple, Tuple

from shared.constants import FIRST_PATH_LABEL, HUB_TOKEN, MIN_VERTICES
from shared.errors import NotAnEdgeError, NTooSmallError


VertexLabel = int

# Greater than any finite label a fan graph can have
HUB: VertexLabel = sys.maxsize


class Edge(NamedTuple):
    """
    Unordered pair of adjacent vertices, stored smaller label first.

    Attributes:
        lo: Smaller endpoint (always a path vertex)
        hi: Larger endpoint (a path vertex or HUB)
    """
    lo: VertexLabel
    hi: VertexLabel

    @classmethod
    def of(cls, u: VertexLabel, v: VertexLabel) -> "Edge":
        """Create the edge {u, v} in canonical orientation."""
        return cls(u, v) if u < v else cls(v, u)

    def other(self, v: VertexLabel) -> VertexLabel:
        """Return the endpoint that is not v."""
        return self.hi if v == self.lo else self.lo

    def __str__(self) -> str:
        return f"{label_text(self.lo)},{label_text(self.hi)}"


def label_text(v: VertexLabel) -> str:
    """Render a vertex label, with the hub as 'inf'."""
    return HUB_TOKEN if v == HUB else str(v)


def check_n(n: int) -> None:
    """Raise NTooSmallError unless F_n exists."""
    if n < MIN_VERTICES:
        raise NTooSmallError(f"n must be at least {MIN_VERTICES}, got {n}")


def is_vertex(n: int, v: VertexLabel) -> bool:
    """Check if v labels a vertex of F_n."""
    return v == HUB or FIRST_PATH_LABEL <= v <= n


def is_edge(n: int, u: VertexLabel, v: VertexLabel) -> bool:
    """Check if {u, v} is an edge of F_n."""
    lo, hi = (u, v) if u < v else (v, u)
    if not FIRST_PATH_LABEL <= lo <= n:
        return False
    return hi == HUB or hi == lo + 1 <= n


def edge_count(n: int) -> int:
    """Number of edges of F_n: n-2 path edges plus n-1 spokes."""
    check_n(n)
    return 2 * n - 3


def edge_index(n: int, lo: VertexLabel, hi: VertexLabel) -> int:
    """
    Canonical index of a known-valid edge (lo < hi), no validation.

    Edges are ranked in (lo, hi) order: {k, k+1} sits at 2(k-2) and
    {k, inf} right after it, except {n, inf} which is last at 2n-4.
    """
    if lo == n:
        return 2 * n - 4
    return 2 * (lo - FIRST_PATH_LABEL) + (hi == HUB)


def canonical_edge_index(n: int, e: Edge) -> int:
    """
    Map an edge of F_n to its position in [0, 2n-4].

    Args:
        n: Number of vertices of the fan graph
        e: Edge of F_n (either orientation)

    Returns:
        Rank of the edge in (lo, hi) order

    Raises:
        NotAnEdgeError: If e is not an edge of F_n
    """
    check_n(n)
    u, v = e
    if not is_edge(n, u, v):
        raise NotAnEdgeError(f"{{{label_text(u)},{label_text(v)}}} is not an edge of F_{n}")
    lo, hi = (u, v) if u < v else (v, u)
    return edge_index(n, lo, hi)


def edge_from_index(n: int, index: int) -> Edge:
    """
    Inverse of canonical_edge_index.

    Raises:
        NotAnEdgeError: If index is outside [0, 2n-4]
    """
    check_n(n)
    if not 0 <= index <= 2 * n - 4:
        raise NotAnEdgeError(f"edge index {index} out of range for F_{n}")
    if index == 2 * n - 4:
        return Edge(n, HUB)
    lo = index // 2 + FIRST_PATH_LABEL
    return Edge(lo, HUB) if index % 2 else Edge(lo, lo + 1)


@lru_cache(maxsize=64)
def fan_edges(n: int) -> Tuple[Edge, ...]:
    """All edges of F_n in canonical order."""
    return tuple(edge_from_index(n, i) for i in range(edge_count(n)))


def fan_neighbors(n: int, v: VertexLabel) -> List[VertexLabel]:
    """Neighbors of v in F_n, ascending."""
    if v == HUB:
        return list(range(FIRST_PATH_LABEL, n + 1))
    neighbors = []
    if v - 1 >= FIRST_PATH_LABEL:
        neighbors.append(v - 1)
    if v + 1 <= n:
        neighbors.append(v + 1)
    neighbors.append(HUB)
    return neighbors


def vertices(n: int) -> List[VertexLabel]:
    """Vertices of F_n in label order, hub last."""
    return list(range(FIRST_PATH_LABEL, n + 1)) + [HUB]
