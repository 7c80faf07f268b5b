"""
Unit tests for fan graph vertices, edges and canonical edge indexing.
"""
import pytest

from fan.graph import (
    HUB,
    Edge,
    canonical_edge_index,
    check_n,
    edge_count,
    edge_from_index,
    fan_edges,
    fan_neighbors,
    is_edge,
    is_vertex,
    label_text,
    vertices,
)
from shared.errors import NotAnEdgeError, NTooSmallError


class TestEdge:
    """Test cases for the Edge pair."""

    def test_edge_of_orders_endpoints(self):
        """Test that Edge.of stores the smaller label first."""
        assert Edge.of(HUB, 3) == Edge(3, HUB)
        assert Edge.of(4, 3) == Edge(3, 4)

    def test_edge_other(self):
        """Test getting the opposite endpoint."""
        edge = Edge(3, HUB)
        assert edge.other(3) == HUB
        assert edge.other(HUB) == 3

    def test_edge_text(self):
        """Test the hub is written as inf."""
        assert str(Edge(3, HUB)) == "3,inf"
        assert str(Edge(2, 3)) == "2,3"
        assert label_text(HUB) == "inf"

    def test_hub_sorts_last(self):
        """Test the hub compares greater than every path label."""
        assert sorted([HUB, 7, 2]) == [2, 7, HUB]


class TestFanGraph:
    """Test cases for the vertex and edge sets of F_n."""

    def test_check_n(self):
        """Test that F_1 and below are rejected."""
        check_n(2)
        with pytest.raises(NTooSmallError):
            check_n(1)
        with pytest.raises(ValueError):
            check_n(0)

    def test_edge_count(self):
        """Test F_n has 2n-3 edges."""
        assert edge_count(2) == 1
        assert edge_count(5) == 7
        assert len(fan_edges(9)) == 15

    def test_fan_edges_order(self):
        """Test edges come in (lo, hi) order with the hub after the path edge."""
        assert fan_edges(5) == (
            Edge(2, 3), Edge(2, HUB), Edge(3, 4), Edge(3, HUB),
            Edge(4, 5), Edge(4, HUB), Edge(5, HUB),
        )
        assert fan_edges(2) == (Edge(2, HUB),)

    def test_is_vertex(self):
        """Test vertex membership."""
        assert is_vertex(5, 2)
        assert is_vertex(5, 5)
        assert is_vertex(5, HUB)
        assert not is_vertex(5, 1)
        assert not is_vertex(5, 6)

    def test_is_edge(self):
        """Test edge membership in either orientation."""
        assert is_edge(5, 2, 3)
        assert is_edge(5, 3, 2)
        assert is_edge(5, HUB, 5)
        assert not is_edge(5, 2, 4)
        assert not is_edge(5, 5, 6)
        assert not is_edge(5, 6, HUB)
        assert not is_edge(5, 3, 3)

    def test_fan_neighbors(self):
        """Test neighbor lists are ascending with the hub last."""
        assert fan_neighbors(5, 2) == [3, HUB]
        assert fan_neighbors(5, 3) == [2, 4, HUB]
        assert fan_neighbors(5, 5) == [4, HUB]
        assert fan_neighbors(5, HUB) == [2, 3, 4, 5]

    def test_vertices(self):
        """Test vertices are listed in label order."""
        assert vertices(4) == [2, 3, 4, HUB]


class TestCanonicalEdgeIndex:
    """Test cases for the edge index used by bitsets and serialization."""

    def test_known_indices(self):
        """Test hand-checked indices in F_5."""
        assert canonical_edge_index(5, (2, 3)) == 0
        assert canonical_edge_index(5, (2, HUB)) == 1
        assert canonical_edge_index(5, (4, 5)) == 4
        assert canonical_edge_index(5, (4, HUB)) == 5
        assert canonical_edge_index(5, (5, HUB)) == 6

    def test_orientation_does_not_matter(self):
        """Test {u, v} and {v, u} share an index."""
        assert canonical_edge_index(6, (HUB, 2)) == canonical_edge_index(6, (2, HUB))
        assert canonical_edge_index(6, (5, 4)) == canonical_edge_index(6, (4, 5))

    def test_last_spoke_is_last(self):
        """Test {n, inf} always takes the final index 2n-4."""
        for n in range(2, 12):
            assert canonical_edge_index(n, (n, HUB)) == 2 * n - 4

    def test_indices_follow_edge_order(self):
        """Test the index of each edge is its position in fan_edges."""
        for n in range(2, 10):
            for i, edge in enumerate(fan_edges(n)):
                assert canonical_edge_index(n, edge) == i
                assert edge_from_index(n, i) == edge

    def test_non_edge_rejected(self):
        """Test pairs outside F_n raise NotAnEdgeError."""
        with pytest.raises(NotAnEdgeError):
            canonical_edge_index(5, (2, 4))
        with pytest.raises(NotAnEdgeError):
            canonical_edge_index(5, (6, HUB))
        with pytest.raises(NotAnEdgeError):
            canonical_edge_index(5, (1, 2))

    def test_edge_from_index_out_of_range(self):
        """Test indices outside [0, 2n-4] are rejected."""
        with pytest.raises(NotAnEdgeError):
            edge_from_index(5, 7)
        with pytest.raises(NotAnEdgeError):
            edge_from_index(5, -1)
