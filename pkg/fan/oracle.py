"""
Brute-force ground truth for fan graph spanning tree listings.

Trees are enumerated straight from the definition, as (n-1)-edge subsets of
F_n that union-find accepts, with no use of the generators. Listing checks run
on numpy arrays of membership bitsets.
"""

from dataclasses import asdict, dataclass
from itertools import combinations
from math import comb
from typing import List, Optional, Sequence, Set, Tuple

import numpy as np

from fan.graph import edge_count, fan_edges
from fan.tree import SpanningTree
from fan.union_find import forms_spanning_tree
from shared.constants import MIN_VERTICES, ORACLE_MAX_N
from shared.errors import OracleRangeExceededError
from shared.logging_config import get_logger


logger = get_logger(__name__)


def check_oracle_range(n: int) -> None:
    """Raise OracleRangeExceededError unless brute force can handle F_n."""
    if not MIN_VERTICES <= n <= ORACLE_MAX_N:
        raise OracleRangeExceededError(
            f"brute-force enumeration supports {MIN_VERTICES} <= n <= {ORACLE_MAX_N}, got {n}"
        )


def enumerate_all_bits(n: int) -> np.ndarray:
    """
    Membership bitsets of every spanning tree of F_n, ascending.

    Raises:
        OracleRangeExceededError: If n is outside [2, ORACLE_MAX_N]
    """
    check_oracle_range(n)
    edges = fan_edges(n)
    m = edge_count(n)
    logger.debug("enumerating %d edge subsets of F_%d", comb(m, n - 1), n)
    found: List[int] = []
    for subset in combinations(range(m), n - 1):
        if forms_spanning_tree(n, (edges[i] for i in subset)):
            found.append(sum(1 << i for i in subset))
    return np.sort(np.array(found, dtype=np.int64))


def enumerate_all(n: int) -> Set[SpanningTree]:
    """
    Every spanning tree of F_n.

    Raises:
        OracleRangeExceededError: If n is outside [2, ORACLE_MAX_N]
    """
    return {SpanningTree.from_bits(n, int(bits)) for bits in enumerate_all_bits(n)}


@dataclass
class VerificationReport:
    """
    Outcome of checking a listing against the pivot Gray code properties.

    Attributes:
        n: Number of vertices
        tree_total: Length of the listing
        distinct: No tree appears twice
        exhaustive: The listing's trees are exactly the spanning trees of F_n
        pivot_ok: Consecutive trees differ by one edge move at a shared vertex
        first_violation: (index, description) of the earliest failure; index
            len(listing) stands for trees missing from the listing
    """

    n: int
    tree_total: int
    distinct: bool
    exhaustive: bool
    pivot_ok: bool
    first_violation: Optional[Tuple[int, str]] = None

    @property
    def ok(self) -> bool:
        return self.distinct and self.exhaustive and self.pivot_ok

    def to_dict(self) -> dict:
        return asdict(self)


def _endpoint_table(n: int) -> Tuple[np.ndarray, np.ndarray]:
    edges = fan_edges(n)
    lo = np.array([e.lo for e in edges], dtype=np.int64)
    hi = np.array([e.hi for e in edges], dtype=np.int64)
    return lo, hi


def _pivot_breaks(n: int, bits: np.ndarray) -> np.ndarray:
    """Indices i >= 1 where listing[i] is not one pivot move from listing[i-1]."""
    if len(bits) < 2:
        return np.zeros(0, dtype=np.int64)
    diff = bits[1:] ^ bits[:-1]
    two_edges = np.bitwise_count(diff) == 2
    # Split each two-bit difference into its low and high edge
    low = diff & -diff
    high = diff ^ low
    safe_low = np.where(two_edges, low, 1)
    safe_high = np.where(two_edges, high, 1)
    first = np.bitwise_count(safe_low - 1).astype(np.int64)
    second = np.bitwise_count(safe_high - 1).astype(np.int64)
    lo, hi = _endpoint_table(n)
    shared = (
        (lo[first] == lo[second])
        | (lo[first] == hi[second])
        | (hi[first] == lo[second])
        | (hi[first] == hi[second])
    )
    return np.nonzero(~(two_edges & shared))[0] + 1


def verify_listing(n: int, listing: Sequence[SpanningTree]) -> VerificationReport:
    """
    Check a listing for distinctness, exhaustiveness and the pivot property.

    Elements that are not spanning trees of F_n are reported as violations.

    Raises:
        OracleRangeExceededError: If n is outside [2, ORACLE_MAX_N]
    """
    all_bits = enumerate_all_bits(n)
    total = len(listing)
    violations: List[Tuple[int, str]] = []

    for i, tree in enumerate(listing):
        if tree.n != n or not tree.is_spanning_tree():
            violations.append((i, f"element {i} is not a spanning tree of F_{n}"))
            break

    bits = np.array([tree.bits if tree.n == n else 0 for tree in listing], dtype=np.int64)

    distinct = True
    if total:
        _, first_seen, inverse = np.unique(bits, return_index=True, return_inverse=True)
        repeats = np.nonzero(first_seen[inverse.ravel()] != np.arange(total))[0]
        if len(repeats):
            distinct = False
            i = int(repeats[0])
            violations.append((i, f"element {i} repeats element {int(first_seen[inverse.ravel()[i]])}"))

    exhaustive = total == len(all_bits) and np.array_equal(np.unique(bits), all_bits)
    if not exhaustive:
        missing = len(np.setdiff1d(all_bits, bits))
        violations.append((total, f"{missing} spanning trees of F_{n} missing, listing has {total}"))

    breaks = _pivot_breaks(n, bits)
    pivot_ok = len(breaks) == 0
    if not pivot_ok:
        i = int(breaks[0])
        violations.append((i, f"element {i} is not a pivot move from element {i - 1}"))

    report = VerificationReport(
        n=n,
        tree_total=total,
        distinct=distinct,
        exhaustive=bool(exhaustive),
        pivot_ok=pivot_ok,
        first_violation=min(violations, key=lambda v: v[0]) if violations else None,
    )
    logger.debug("verified listing of F_%d: %s", n, report)
    return report


def listings_equal(
    a: Sequence[SpanningTree], b: Sequence[SpanningTree]
) -> Tuple[bool, Optional[int]]:
    """
    Compare two listings element by element.

    Returns:
        (True, None) if equal, else (False, first index where they differ);
        a length mismatch diverges at the shorter length
    """
    for i, (x, y) in enumerate(zip(a, b)):
        if x.key != y.key:
            return False, i
    if len(a) != len(b):
        return False, min(len(a), len(b))
    return True, None
