"""
Text encoding of spanning trees and edge moves.

Tree grammar (edges are written in canonical index order, read in any order):

    tree   := edge (";" edge)*
    edge   := vertex "," vertex
    vertex := integer | "inf"

Move lines read "-u,v +u,w": delete {u, v}, add {u, w}.
"""

from functools import lru_cache
from typing import Tuple

from fan.graph import HUB, VertexLabel, check_n, edge_index, fan_edges, is_edge
from fan.tree import EdgeMove, SpanningTree
from shared.constants import (
    EDGE_SEPARATOR,
    HUB_TOKEN,
    MOVE_ADD_PREFIX,
    MOVE_REMOVE_PREFIX,
    VERTEX_SEPARATOR,
)
from shared.errors import (
    DuplicateEdgeError,
    MalformedTokenError,
    NotAnEdgeError,
    NotASpanningTreeError,
    WrongEdgeCountError,
)


@lru_cache(maxsize=64)
def _edge_tokens(n: int) -> Tuple[str, ...]:
    """Text of every edge of F_n, indexed canonically."""
    return tuple(str(e) for e in fan_edges(n))


def serialize_tree(tree: SpanningTree) -> str:
    """Encode a tree as 'lo,hi' edges in canonical order joined by ';'."""
    tokens = _edge_tokens(tree.n)
    bits = tree.bits
    return EDGE_SEPARATOR.join(tokens[i] for i in range(len(tokens)) if bits >> i & 1)


def parse_vertex(token: str) -> VertexLabel:
    """
    Parse a vertex token: a decimal integer or 'inf'.

    Raises:
        MalformedTokenError: If the token is neither
        NotAnEdgeError: If the integer is too large to label a path vertex
    """
    token = token.strip()
    if token == HUB_TOKEN:
        return HUB
    if not (token.isascii() and token.isdigit()):
        raise MalformedTokenError(f"invalid vertex token: '{token}'")
    value = int(token)
    if value >= HUB:
        raise NotAnEdgeError(f"vertex {token} is not a vertex of any fan graph")
    return value


def _parse_edge(token: str) -> Tuple[VertexLabel, VertexLabel]:
    parts = token.split(VERTEX_SEPARATOR)
    if len(parts) != 2:
        raise MalformedTokenError(f"invalid edge token: '{token}'")
    return parse_vertex(parts[0]), parse_vertex(parts[1])


def parse_tree(n: int, text: str) -> SpanningTree:
    """
    Decode tree text and check it is a spanning tree of F_n.

    Args:
        n: Number of vertices
        text: Edges separated by ';', endpoints by ','

    Returns:
        The parsed tree

    Raises:
        MalformedTokenError: Bad vertex or edge token
        DuplicateEdgeError: An edge given twice
        NotAnEdgeError: A pair that is not an edge of F_n
        WrongEdgeCountError: Not exactly n-1 edges
        NotASpanningTreeError: n-1 edges that contain a cycle
    """
    check_n(n)
    text = text.strip()
    if not text:
        raise MalformedTokenError("empty tree text")
    bits = 0
    count = 0
    for token in text.split(EDGE_SEPARATOR):
        u, v = _parse_edge(token)
        if not is_edge(n, u, v):
            raise NotAnEdgeError(f"'{token.strip()}' is not an edge of F_{n}")
        lo, hi = (u, v) if u < v else (v, u)
        bit = 1 << edge_index(n, lo, hi)
        if bits & bit:
            raise DuplicateEdgeError(f"edge '{token.strip()}' appears twice")
        bits |= bit
        count += 1
    if count != n - 1:
        raise WrongEdgeCountError(f"a spanning tree of F_{n} has {n - 1} edges, got {count}")
    tree = SpanningTree.from_bits(n, bits)
    if not tree.is_spanning_tree():
        raise NotASpanningTreeError(f"'{text}' is not a spanning tree of F_{n}")
    return tree


def format_move(move: EdgeMove) -> str:
    """Encode a move as '-u,v +u,w'."""
    return str(move)


def parse_move(text: str) -> EdgeMove:
    """
    Decode a '-u,v +u,w' move line.

    Raises:
        MalformedTokenError: If the line does not follow the format or the two
            edges do not share their first vertex
        NotAnEdgeError: If a vertex integer is too large to label a path vertex
    """
    parts = text.split()
    if (
        len(parts) != 2
        or not parts[0].startswith(MOVE_REMOVE_PREFIX)
        or not parts[1].startswith(MOVE_ADD_PREFIX)
    ):
        raise MalformedTokenError(f"invalid move line: '{text}'")
    pivot, removed = _parse_edge(parts[0][len(MOVE_REMOVE_PREFIX):])
    other_pivot, added = _parse_edge(parts[1][len(MOVE_ADD_PREFIX):])
    if pivot != other_pivot:
        raise MalformedTokenError(f"move edges do not share the pivot: '{text}'")
    return EdgeMove(pivot, removed, added)
