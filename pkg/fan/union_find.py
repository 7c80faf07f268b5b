"""
Union-Find data structure for spanning tree checks.
"""

from typing import Iterable

from fan.graph import HUB, Edge, VertexLabel
from shared.constants import FIRST_PATH_LABEL


class UnionFind:
    """Disjoint sets over the integers 0..size-1 (union by rank, path halving)."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size
        self.components = size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of x and y; False if they were already joined."""
        x_root = self.find(x)
        y_root = self.find(y)
        if x_root == y_root:
            return False
        if self.rank[x_root] < self.rank[y_root]:
            x_root, y_root = y_root, x_root
        self.parent[y_root] = x_root
        if self.rank[x_root] == self.rank[y_root]:
            self.rank[x_root] += 1
        self.components -= 1
        return True

    def is_same(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)

    def __repr__(self) -> str:
        return f"UnionFind({self.parent})"


def vertex_slot(n: int, v: VertexLabel) -> int:
    """Dense index of a vertex of F_n: v_2..v_n -> 0..n-2, hub -> n-1."""
    return n - 1 if v == HUB else v - FIRST_PATH_LABEL


def forms_spanning_tree(n: int, edges: Iterable[Edge]) -> bool:
    """
    Check that edges are exactly n-1 edges forming an acyclic connected graph.

    Args:
        n: Number of vertices
        edges: Edges of F_n

    Returns:
        True if the edges form a spanning tree on all n vertices
    """
    uf = UnionFind(n)
    count = 0
    for lo, hi in edges:
        if not uf.union(vertex_slot(n, lo), vertex_slot(n, hi)):
            return False
        count += 1
    return count == n - 1 and uf.components == 1
