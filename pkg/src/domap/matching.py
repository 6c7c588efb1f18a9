"""Exact existence decisions via maximum matching in the compatibility graph.

The compatibility graph has the 2**m domain words on the left and the ball
B(n, w) on the right (referenced by rank, never materialized as words).
A mapping for graph G exists iff the maximum matching saturates the left
side; the matching itself materializes a mapping, and an imperfect
matching yields a Hall violator by alternating reachability.
"""

from __future__ import annotations

from array import array
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional

from .ball import ball_size, unrank
from .errors import ResourceError
from .graphs import DominationGraph
from .mapping import DominationMapping

DEFAULT_MAX_EDGES = 80_000_000


@dataclass(frozen=True)
class CompatibilityGraph:
    """CSR adjacency from domain words to dominated ball ranks."""

    graph: DominationGraph
    w: int
    n_left: int
    n_right: int
    indptr: array
    indices: array

    def neighbors(self, x: int):
        return self.indices[self.indptr[x] : self.indptr[x + 1]]

    @property
    def n_edges(self) -> int:
        return len(self.indices)

    def edges(self):
        """(x, rank) pairs in lexicographic order."""
        for x in range(self.n_left):
            for t in range(self.indptr[x], self.indptr[x + 1]):
                yield (x, self.indices[t])


def _count_edges(graph: DominationGraph, w: int) -> int:
    """Sum over x of |B restricted to the blocks of supp(x)|, exactly."""
    total = 0
    degs = graph.degrees
    m = graph.m
    for x in range(1 << m):
        nx = sum(degs[i] for i in range(m) if (x >> (m - 1 - i)) & 1)
        total += sum(comb(nx, k) for k in range(min(w, nx) + 1))
    return total


def build_compatibility(
    graph: DominationGraph, w: int, max_edges: int = DEFAULT_MAX_EDGES
) -> CompatibilityGraph:
    n, m = graph.n, graph.m
    n_left = 1 << m
    n_right = ball_size(n, w)
    n_edges = _count_edges(graph, w)
    if n_edges > max_edges:
        raise ResourceError(
            f"compatibility graph needs {n_edges} edges, budget {max_edges}"
        )
    if n_right >= 1 << 31:
        raise ResourceError("ball does not fit 32-bit right indices")
    bases = [0]
    for k in range(n):
        bases.append(bases[-1] + comb(n, k))
    indptr = array("q", [0] * (n_left + 1))
    indices = array("i")
    for x in range(n_left):
        allowed = graph.allowed_mask(x)
        exps = []  # ascending: the low bit comes out first
        a = allowed
        while a:
            low = a & -a
            exps.append(low.bit_length() - 1)
            a ^= low
        row = [0]
        for k in range(1, min(w, len(exps)) + 1):
            base = bases[k]
            if k == 1:
                row.extend(base + e for e in exps)
            elif k == 2:
                row.extend(
                    sorted(
                        base + comb(e2, 2) + e1
                        for e1, e2 in combinations(exps, 2)
                    )
                )
            else:
                row.extend(
                    sorted(
                        base + sum(comb(e, j + 1) for j, e in enumerate(combo))
                        for combo in combinations(exps, k)
                    )
                )
        indices.extend(row)
        indptr[x + 1] = len(indices)
    return CompatibilityGraph(graph, w, n_left, n_right, indptr, indices)


@dataclass(frozen=True)
class MatchingResult:
    size: int
    left_match: list  # rank matched to each left word, -1 if free
    right_match: list  # left word matched to each rank, -1 if free


def max_matching(h: CompatibilityGraph) -> MatchingResult:
    """Hopcroft-Karp with deterministic lowest-rank-first tie-breaking."""
    return max_matching_csr(h.n_left, h.n_right, h.indptr, h.indices)


def max_matching_csr(n_left: int, n_right: int, indptr, indices) -> MatchingResult:
    """Hopcroft-Karp on a raw CSR adjacency (left vertex -> right indices)."""
    left_match = [-1] * n_left
    right_match = [-1] * n_right
    size = 0

    # Greedy initialization takes care of almost everything on the dense
    # instances and leaves only a few augmenting phases.
    for x in range(n_left):
        for t in range(indptr[x], indptr[x + 1]):
            v = indices[t]
            if right_match[v] < 0:
                left_match[x] = v
                right_match[v] = x
                size += 1
                break

    INF = n_left + n_right + 1
    dist = [0] * n_left
    queue: deque = deque()
    while True:
        # BFS: layer left vertices by alternating distance from free lefts.
        queue.clear()
        for x in range(n_left):
            if left_match[x] < 0:
                dist[x] = 0
                queue.append(x)
            else:
                dist[x] = INF
        reachable_free = False
        while queue:
            x = queue.popleft()
            d1 = dist[x] + 1
            for t in range(indptr[x], indptr[x + 1]):
                u = right_match[indices[t]]
                if u < 0:
                    reachable_free = True
                elif dist[u] == INF:
                    dist[u] = d1
                    queue.append(u)
        if not reachable_free:
            break
        # DFS phase along layered edges, iterative to spare the stack.
        ptr = list(indptr[:n_left])
        for root in range(n_left):
            if left_match[root] >= 0:
                continue
            stack = [root]
            path: list[tuple[int, int]] = []
            while stack:
                x = stack[-1]
                advanced = False
                while ptr[x] < indptr[x + 1]:
                    v = indices[ptr[x]]
                    ptr[x] += 1
                    u = right_match[v]
                    if u < 0:
                        # augment along the recorded path plus (x, v)
                        path.append((x, v))
                        for px, pv in path:
                            left_match[px] = pv
                            right_match[pv] = px
                        size += 1
                        stack.clear()
                        path.clear()
                        advanced = True
                        break
                    if dist[u] == dist[x] + 1:
                        path.append((x, v))
                        stack.append(u)
                        advanced = True
                        break
                if not advanced:
                    dist[x] = INF
                    stack.pop()
                    if path:
                        path.pop()
    return MatchingResult(size, left_match, right_match)


def extract_mapping(h: CompatibilityGraph, result: MatchingResult) -> DominationMapping:
    table = tuple(unrank(r, h.graph.n, h.w) for r in result.left_match)
    return DominationMapping(h.graph.m, h.graph.n, h.w, h.graph, table)


def decide_graph(
    graph: DominationGraph,
    w: int,
    max_edges: int = DEFAULT_MAX_EDGES,
    extract: bool = True,
) -> tuple[bool, Optional[DominationMapping]]:
    """(exists, mapping): perfect-matching decision for one graph."""
    if (1 << graph.m) > ball_size(graph.n, w):
        return False, None
    h = build_compatibility(graph, w, max_edges=max_edges)
    result = max_matching(h)
    if result.size < h.n_left:
        return False, None
    return True, (extract_mapping(h, result) if extract else None)


def hall_violator(
    h: CompatibilityGraph, result: Optional[MatchingResult] = None
) -> Optional[frozenset]:
    """A bad set X (|N(X)| < |X|) when the matching is imperfect, else None.

    X is the set of left vertices reachable from the free ones by
    alternating paths; its neighborhood is exactly the matched right
    vertices reached, giving |N(X)| = |X| - deficiency.
    """
    if result is None:
        result = max_matching(h)
    if result.size == h.n_left:
        return None
    indptr, indices = h.indptr, h.indices
    seen_left = [False] * h.n_left
    queue = deque()
    for x in range(h.n_left):
        if result.left_match[x] < 0:
            seen_left[x] = True
            queue.append(x)
    while queue:
        x = queue.popleft()
        for t in range(indptr[x], indptr[x + 1]):
            u = result.right_match[indices[t]]
            if u >= 0 and not seen_left[u]:
                seen_left[u] = True
                queue.append(u)
    return frozenset(x for x in range(h.n_left) if seen_left[x])


def neighborhood_size(h: CompatibilityGraph, xs) -> int:
    """|N(X)| by direct recount (bitset union over ball ranks)."""
    mask = 0
    for x in xs:
        for t in range(h.indptr[x], h.indptr[x + 1]):
            mask |= 1 << h.indices[t]
    return mask.bit_count()


def degree_multisets(m: int, n: int):
    """Nondecreasing positive degree sequences summing to n."""

    def parts(total: int, slots: int, minimum: int):
        if slots == 1:
            if total >= minimum:
                yield (total,)
            return
        for first in range(minimum, total // slots + 1):
            for rest in parts(total - first, slots - 1, first):
                yield (first,) + rest

    return list(parts(n, m, 1))


def equitability_order(m: int, n: int) -> list[tuple[int, ...]]:
    """All degree multisets, the equitable one first, then by spread."""
    return sorted(degree_multisets(m, n), key=lambda d: (d[-1] - d[0], d))


@dataclass(frozen=True)
class AllGraphsResult:
    exists: bool
    graph: Optional[DominationGraph]
    mapping: Optional[DominationMapping]
    equitable_succeeded: Optional[bool]
    graphs_tried: int


def decide_all_graphs(
    m: int,
    n: int,
    w: int,
    max_graphs: int = 5000,
    max_edges: int = DEFAULT_MAX_EDGES,
) -> AllGraphsResult:
    """Try every degree multiset, most equitable first.

    Records whether the first (equitable) candidate already succeeded,
    which is the empirical content of the equitable-graph conjecture; a
    success on a later candidate only would be a counterexample.

    When the ball is smaller than the domain no graph can work, so the
    enumeration is skipped outright.  The cap limits how many matchings
    are attempted: a success within the cap is conclusive, running out of
    budget with failures only is not, and raises.
    """
    if n < m or (1 << m) > ball_size(n, w):
        return AllGraphsResult(False, None, None, None, 0)
    order = equitability_order(m, n)
    equitable_ok: Optional[bool] = None
    for idx, degrees in enumerate(order):
        if idx >= max_graphs:
            raise ResourceError(
                f"no decision within the first {max_graphs} of {len(order)} graphs"
            )
        graph = DominationGraph.from_degrees(degrees)
        exists, mapping = decide_graph(graph, w, max_edges=max_edges)
        if idx == 0:
            equitable_ok = exists
        if exists:
            return AllGraphsResult(True, graph, mapping, equitable_ok, idx + 1)
    return AllGraphsResult(False, None, None, equitable_ok, len(order))
