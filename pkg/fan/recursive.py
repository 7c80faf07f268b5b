"""
Recursive pivot Gray code for the spanning trees of F_n.

Gen(k, s1, varEdge) and its exact reversal RevGen(k, s1, varEdge) mutate one
shared tree. LIST(n) starts from the path P_n and runs Gen(n, 1, 0); REVLIST(n)
starts from the last tree L_n and runs RevGen(n, 1, 0). Every tree is reached
by a single edge move, and the whole listing costs O(1) amortized per tree.

Gen and RevGen are written twice over the same moves. As step programs that
yield either a recursive Call or an EdgeMove, they drive an explicit-stack
walker behind the pull iterators, which can stop at any tree. As plain
recursion over precomputed move masks, they drive the push-style sink runs
(run, gen, revgen, listing), which is the fast path for full listings.
"""

from dataclasses import dataclass
from functools import lru_cache, partial
from typing import Callable, Iterator, List, NamedTuple, Optional, Tuple, Union

from fan.graph import HUB, Edge, check_n, edge_index, is_edge
from fan.tree import EdgeMove, SpanningTree, path_tree
from shared.constants import FIRST_PATH_LABEL
from shared.errors import GenInvariantBroken
from shared.logging_config import get_logger


logger = get_logger(__name__)

# Receives each emitted tree; the move is None for the initial tree.
# The tree is the live working copy: copy it to keep it.
Sink = Callable[[Optional[EdgeMove], SpanningTree], None]


class Call(NamedTuple):
    """A recursive invocation of Gen (reverse=False) or RevGen (reverse=True)."""
    reverse: bool
    k: int
    s1: bool
    var_edge: bool


Step = Union[Call, EdgeMove]


def _gen_steps(k: int, s1: bool, var_edge: bool) -> Iterator[Step]:
    """Procedure Gen(k, s1, varEdge)."""
    if k == 2:  # F_2 base case
        if var_edge:
            yield EdgeMove(2, HUB, 3)
    elif k == 3:  # F_3 base case
        if s1:
            yield EdgeMove(3, 2, 4 if var_edge else HUB)
        yield EdgeMove(2, HUB, 3)
    else:
        if s1:
            yield Call(False, k - 1, True, False)  # S1
            yield EdgeMove(k, k - 1, k + 1 if var_edge else HUB)
        yield Call(True, k - 1, True, False)  # S2
        yield EdgeMove(k - 1, k - 2, k)
        yield Call(False, k - 2, True, True)  # S3
        if k > 4:
            yield EdgeMove(k - 2, k - 1, HUB)
        yield Call(True, k - 2, False, False)  # S4


def _revgen_steps(k: int, s1: bool, var_edge: bool) -> Iterator[Step]:
    """Procedure RevGen(k, s1, varEdge): Gen's operations in reverse order."""
    if k == 2:  # F_2 base case
        if var_edge:
            yield EdgeMove(2, 3, HUB)
    elif k == 3:  # F_3 base case
        yield EdgeMove(2, 3, HUB)
        if s1:
            yield EdgeMove(3, 4 if var_edge else HUB, 2)
    else:
        yield Call(False, k - 2, False, False)  # S4
        if k > 4:
            yield EdgeMove(k - 2, HUB, k - 1)
        yield Call(True, k - 2, True, True)  # S3
        yield EdgeMove(k - 1, k, k - 2)
        yield Call(False, k - 1, True, False)  # S2
        if s1:
            yield EdgeMove(k, k + 1 if var_edge else HUB, k - 1)
            yield Call(True, k - 1, True, False)  # S1


def _steps(call: Call) -> Iterator[Step]:
    if call.reverse:
        return _revgen_steps(call.k, call.s1, call.var_edge)
    return _gen_steps(call.k, call.s1, call.var_edge)


# A move resolved against F_n: (move, removed mask, removed|added mask,
# removed edge lo/hi, added edge lo/hi). The move applies to a tree exactly
# when bits & flip == need.
MoveOp = Tuple[EdgeMove, int, int, int, int, int, int]


@lru_cache(maxsize=4096)
def _move_op(n: int, move: EdgeMove) -> MoveOp:
    """Resolve a move to its bit masks; moves leaving F_n never apply."""
    pivot, removed, added = move
    if not (is_edge(n, pivot, removed) and is_edge(n, pivot, added)):
        return (move, -1, 0, 0, 0, 0, 0)
    lo_r, hi_r = Edge.of(pivot, removed)
    lo_a, hi_a = Edge.of(pivot, added)
    need = 1 << edge_index(n, lo_r, hi_r)
    flip = need | 1 << edge_index(n, lo_a, hi_a)
    return (move, need, flip, lo_r, hi_r, lo_a, hi_a)


@dataclass
class GenContext:
    """
    Shared state of one Gen/RevGen run.

    Attributes:
        n: Number of vertices of the fan graph
        tree: The global current tree T, mutated by every move
        sink: Consumer of emitted trees (None discards them)
        emitted: Trees emitted so far, the initial tree included
        calls: Gen/RevGen invocations executed
        max_depth: Deepest recursion reached
    """

    n: int
    tree: SpanningTree
    sink: Optional[Sink] = None
    emitted: int = 0
    calls: int = 0
    max_depth: int = 0

    def emit_initial(self) -> None:
        """Emit the starting tree, as Print(T) before the top-level call."""
        self.emitted += 1
        if self.sink is not None:
            self.sink(None, self.tree)

    def _replace(self, move: EdgeMove) -> None:
        tree = self.tree
        _, need, flip, lo_r, hi_r, lo_a, hi_a = _move_op(self.n, move)
        bits = tree.bits
        if bits & flip != need:
            raise GenInvariantBroken(f"move {move} does not apply to {tree!r}")
        tree.bits = bits ^ flip
        tree.adjacency[lo_r].remove(hi_r)
        tree.adjacency[lo_a].append(hi_a)
        self.emitted += 1

    def walk(self, call: Call) -> Iterator[EdgeMove]:
        """
        Execute a Gen/RevGen call, yielding each move after applying it.

        The recursion runs on an explicit stack of step programs, so the
        caller can stop pulling at any point.
        """
        stack = [_steps(call)]
        self.calls += 1
        self.max_depth = max(self.max_depth, 1)
        while stack:
            step = next(stack[-1], None)
            if step is None:
                stack.pop()
            elif isinstance(step, Call):
                stack.append(_steps(step))
                self.calls += 1
                if len(stack) > self.max_depth:
                    self.max_depth = len(stack)
            else:
                self._replace(step)
                yield step

    def execute(self, call: Call) -> None:
        """
        Run a call to completion, pushing every emitted tree to the sink.

        Same moves, counters and checks as walk, but as plain recursion
        over move masks resolved once per k.
        """
        n = self.n
        tree = self.tree
        adjacency = tree.adjacency
        sink = self.sink
        top = max(call.k, 3)
        op = partial(_move_op, n)

        spoke_2 = op(EdgeMove(2, HUB, 3))
        path_3 = [op(EdgeMove(3, 2, HUB)), op(EdgeMove(3, 2, 4))]
        s1 = [None] * (top + 1)
        s2 = [None] * (top + 1)
        s3 = [None] * (top + 1)
        for k in range(4, top + 1):
            s1[k] = (op(EdgeMove(k, k - 1, HUB)), op(EdgeMove(k, k - 1, k + 1)))
            s2[k] = op(EdgeMove(k - 1, k - 2, k))
            s3[k] = op(EdgeMove(k - 2, k - 1, HUB))
        spoke_2_rev = op(EdgeMove(2, 3, HUB))
        path_3_rev = [op(EdgeMove(3, HUB, 2)), op(EdgeMove(3, 4, 2))]
        s1_rev = [None] * (top + 1)
        s2_rev = [None] * (top + 1)
        s3_rev = [None] * (top + 1)
        for k in range(4, top + 1):
            s1_rev[k] = (op(EdgeMove(k, HUB, k - 1)), op(EdgeMove(k, k + 1, k - 1)))
            s2_rev[k] = op(EdgeMove(k - 1, k, k - 2))
            s3_rev[k] = op(EdgeMove(k - 2, HUB, k - 1))

        emitted = 0
        calls = 0
        max_depth = self.max_depth

        def apply(move_op: MoveOp) -> None:
            nonlocal emitted
            move, need, flip, lo_r, hi_r, lo_a, hi_a = move_op
            bits = tree.bits
            if bits & flip != need:
                raise GenInvariantBroken(f"move {move} does not apply to {tree!r}")
            tree.bits = bits ^ flip
            adjacency[lo_r].remove(hi_r)
            adjacency[lo_a].append(hi_a)
            emitted += 1
            if sink is not None:
                sink(move, tree)

        def forward(k: int, first: bool, var_edge: bool, depth: int) -> None:
            nonlocal calls, max_depth
            calls += 1
            if depth > max_depth:
                max_depth = depth
            if k == 2:
                if var_edge:
                    apply(spoke_2)
            elif k == 3:
                if first:
                    apply(path_3[var_edge])
                apply(spoke_2)
            else:
                depth += 1
                if first:
                    forward(k - 1, True, False, depth)  # S1
                    apply(s1[k][var_edge])
                backward(k - 1, True, False, depth)  # S2
                apply(s2[k])
                forward(k - 2, True, True, depth)  # S3
                if k > 4:
                    apply(s3[k])
                backward(k - 2, False, False, depth)  # S4

        def backward(k: int, first: bool, var_edge: bool, depth: int) -> None:
            nonlocal calls, max_depth
            calls += 1
            if depth > max_depth:
                max_depth = depth
            if k == 2:
                if var_edge:
                    apply(spoke_2_rev)
            elif k == 3:
                apply(spoke_2_rev)
                if first:
                    apply(path_3_rev[var_edge])
            else:
                depth += 1
                forward(k - 2, False, False, depth)  # S4
                if k > 4:
                    apply(s3_rev[k])
                backward(k - 2, True, True, depth)  # S3
                apply(s2_rev[k])
                forward(k - 1, True, False, depth)  # S2
                if first:
                    apply(s1_rev[k][var_edge])
                    backward(k - 1, True, False, depth)  # S1

        try:
            (backward if call.reverse else forward)(call.k, call.s1, call.var_edge, 1)
        finally:
            self.emitted += emitted
            self.calls += calls
            self.max_depth = max_depth


def gen(ctx: GenContext, k: int, s1: bool, var_edge: bool) -> None:
    """Run Gen(k, s1, varEdge) on the context's tree."""
    ctx.execute(Call(False, k, s1, var_edge))


def revgen(ctx: GenContext, k: int, s1: bool, var_edge: bool) -> None:
    """Run RevGen(k, s1, varEdge) on the context's tree."""
    ctx.execute(Call(True, k, s1, var_edge))


def last_tree(n: int) -> SpanningTree:
    """
    The last tree L_n of LIST(n), built directly in O(n).

    L_2, L_3 and L_4 are read off the base cases; beyond that the S4 stage
    ends on L_{n-3} with v_{n-2} v_inf, v_{n-1} v_n and v_n v_inf added.

    Raises:
        NTooSmallError: If n < 2
    """
    check_n(n)
    base = {
        2: [(2, HUB)],
        3: [(2, 3), (3, HUB)],
        4: [(2, 3), (3, 4), (4, HUB)],
    }
    k = (n - FIRST_PATH_LABEL) % 3 + FIRST_PATH_LABEL
    edges = list(base[k])
    while k < n:
        k += 3
        edges += [(k - 2, HUB), (k - 1, k), (k, HUB)]
    return SpanningTree.from_edges(n, edges, validate=False)


def last_tree_reference(n: int) -> SpanningTree:
    """L_n by replaying Gen(n, 1, 0) from P_n and keeping the final tree."""
    check_n(n)
    ctx = GenContext(n=n, tree=path_tree(n))
    gen(ctx, n, True, False)
    return ctx.tree


def run(n: int, reverse: bool = False, sink: Optional[Sink] = None) -> GenContext:
    """
    Produce LIST(n) (or REVLIST(n)) into a sink.

    Args:
        n: Number of vertices
        reverse: Start from L_n and run RevGen instead
        sink: Receives (move, tree) per emitted tree

    Returns:
        The finished context, with its counters

    Raises:
        NTooSmallError: If n < 2
    """
    check_n(n)
    start = last_tree(n) if reverse else path_tree(n)
    ctx = GenContext(n=n, tree=start, sink=sink)
    ctx.emit_initial()
    ctx.execute(Call(reverse, n, True, False))
    logger.debug(
        "%s(%d): %d trees, %d calls, depth %d",
        "REVLIST" if reverse else "LIST", n, ctx.emitted, ctx.calls, ctx.max_depth,
    )
    return ctx


def iter_steps(n: int, reverse: bool = False) -> Iterator[Tuple[Optional[EdgeMove], SpanningTree]]:
    """
    Stream LIST(n) as (move, tree) pairs, starting with (None, first tree).

    The tree is the live working copy and changes on the next step.
    """
    check_n(n)
    start = last_tree(n) if reverse else path_tree(n)
    ctx = GenContext(n=n, tree=start)
    ctx.emit_initial()
    yield None, ctx.tree
    for move in ctx.walk(Call(reverse, n, True, False)):
        yield move, ctx.tree


def iter_list(n: int, reverse: bool = False) -> Iterator[SpanningTree]:
    """Stream copies of the trees of LIST(n) (REVLIST(n) when reverse)."""
    for _, tree in iter_steps(n, reverse):
        yield tree.copy()


def iter_rev_list(n: int) -> Iterator[SpanningTree]:
    return iter_list(n, reverse=True)


def iter_moves(n: int, reverse: bool = False) -> Iterator[EdgeMove]:
    """Stream the t_n - 1 moves of LIST(n) (REVLIST(n) when reverse)."""
    for move, _ in iter_steps(n, reverse):
        if move is not None:
            yield move


def listing(n: int) -> List[SpanningTree]:
    """
    LIST(n): P_n followed by every tree emitted by Gen(n, 1, 0).

    Raises:
        NTooSmallError: If n < 2
    """
    trees: List[SpanningTree] = []
    run(n, sink=lambda _move, tree: trees.append(tree.copy()))
    return trees


def rev_listing(n: int) -> List[SpanningTree]:
    """REVLIST(n): L_n followed by every tree emitted by RevGen(n, 1, 0)."""
    trees: List[SpanningTree] = []
    run(n, reverse=True, sink=lambda _move, tree: trees.append(tree.copy()))
    return trees
