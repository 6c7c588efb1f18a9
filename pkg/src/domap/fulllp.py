"""Unreduced matching program and its symmetry group, at toy scale.

Builds the full edge-indexed program for the equitable graph: the 0/1
incidence matrix with one row per vertex of the compatibility graph and
one column per edge.  The symmetry group combines a permutation of the
left vertices inside each degree class with a block-structure-preserving
permutation of the ball; both act on edges.  Everything here is meant for
brute-force cross-checks of the reduced program on instances with a few
dozen edges, so clarity wins over speed throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .ball import iter_ball, rank, unrank
from .errors import DomainError, ResourceError
from .graphs import DominationGraph, dominates
from .reduced_lp import EquitableSplit, OrbitIndex


@dataclass(frozen=True)
class FullProgram:
    graph: DominationGraph
    w: int
    edges: tuple[tuple[int, int], ...]  # (x, ball rank), lexicographic
    matrix: tuple[tuple[int, ...], ...]  # rows: 2**m left words then ball ranks


def build_full_program(graph: DominationGraph, w: int, max_edges: int = 20000) -> FullProgram:
    m, n = graph.m, graph.n
    ball = list(iter_ball(n, w))
    edges = []
    for x in range(1 << m):
        allowed = graph.allowed_mask(x)
        for r, y in enumerate(ball):
            if y & ~allowed == 0:
                edges.append((x, r))
    if len(edges) > max_edges:
        raise ResourceError(f"{len(edges)} edges exceed the toy-scale cap")
    rows = []
    for x in range(1 << m):
        rows.append(tuple(1 if e[0] == x else 0 for e in edges))
    for r in range(len(ball)):
        rows.append(tuple(1 if e[1] == r else 0 for e in edges))
    return FullProgram(graph, w, tuple(edges), tuple(rows))


def is_feasible(program: FullProgram, x) -> bool:
    """A x <= 1 and x >= 0, exactly."""
    if len(x) != len(program.edges):
        raise DomainError("vector length does not match the edge count")
    if any(v < 0 for v in x):
        return False
    for row in program.matrix:
        if sum(f * v for f, v in zip(row, x) if f) > 1:
            return False
    return True


def objective(x) -> Fraction:
    return sum(x, Fraction(0))


def _block_spans(graph: DominationGraph) -> list[tuple[int, int]]:
    """(start, length) of each vertex's positions; requires consecutive blocks."""
    spans = []
    pos = 0
    for i, d in enumerate(graph.degrees):
        if any(o != i for o in graph.owners[pos : pos + d]):
            raise DomainError("group action needs consecutive blocks in vertex order")
        spans.append((pos, d))
        pos += d
    return spans


def _block_support(y: int, graph: DominationGraph) -> tuple[int, ...]:
    return tuple(
        i for i, mask in enumerate(graph.block_masks) if y & mask
    )


def group_elements(graph: DominationGraph, w: int, max_order: int = 200000):
    """All (gamma, beta) pairs for the equitable graph.

    gamma permutes left vertices within each degree class (returned as a
    tuple image on 0..m-1); beta permutes the ball within fibers of the
    block-support pattern (returned as a rank->rank tuple).
    """
    m, n = graph.m, graph.n
    if not graph.is_equitable:
        raise DomainError("the symmetry group is defined for equitable graphs")
    split = EquitableSplit.for_params(m, n)
    ball = list(iter_ball(n, w))

    fibers: dict[tuple[int, ...], list[int]] = {}
    for r, y in enumerate(ball):
        fibers.setdefault(_block_support(y, graph), []).append(r)

    order = 1
    for f in fibers.values():
        for k in range(2, len(f) + 1):
            order *= k
    class1 = list(range(split.m1))
    class2 = list(range(split.m1, m))
    n_gammas = 1
    for k in range(2, len(class1) + 1):
        n_gammas *= k
    for k in range(2, len(class2) + 1):
        n_gammas *= k
    if order * n_gammas > max_order:
        raise ResourceError(f"group of order {order * n_gammas} exceeds the cap")

    gammas = [
        tuple(p1) + tuple(p2)
        for p1 in permutations(class1)
        for p2 in permutations(class2)
    ]
    fiber_keys = list(fibers)
    betas = []
    for perms in product(*(permutations(fibers[k]) for k in fiber_keys)):
        beta = list(range(len(ball)))
        for key, perm in zip(fiber_keys, perms):
            for src, dst in zip(fibers[key], perm):
                beta[src] = dst
        betas.append(tuple(beta))
    return [(g, b) for g in gammas for b in betas]


def group_generators(graph: DominationGraph, w: int):
    """A small generating set of the same group as group_elements.

    Adjacent transpositions inside each left class, plus a transposition
    and a full cycle inside each ball fiber, generate the whole product of
    symmetric groups; orbit closures under these equal full-group orbits.
    """
    m, n = graph.m, graph.n
    if not graph.is_equitable:
        raise DomainError("the symmetry group is defined for equitable graphs")
    split = EquitableSplit.for_params(m, n)
    ball = list(iter_ball(n, w))
    identity_gamma = tuple(range(m))
    identity_beta = tuple(range(len(ball)))

    gens = []
    for lo, hi in ((0, split.m1), (split.m1, m)):
        for i in range(lo, hi - 1):
            gamma = list(identity_gamma)
            gamma[i], gamma[i + 1] = gamma[i + 1], gamma[i]
            gens.append((tuple(gamma), identity_beta))

    fibers: dict[tuple[int, ...], list[int]] = {}
    for r, y in enumerate(ball):
        fibers.setdefault(_block_support(y, graph), []).append(r)
    for members in fibers.values():
        if len(members) < 2:
            continue
        beta = list(identity_beta)
        beta[members[0]], beta[members[1]] = beta[members[1]], beta[members[0]]
        gens.append((identity_gamma, tuple(beta)))
        if len(members) > 2:
            cycle = list(identity_beta)
            for a, b in zip(members, members[1:] + members[:1]):
                cycle[a] = b
            gens.append((identity_gamma, tuple(cycle)))
    return gens


def apply_gamma_word(x: int, gamma: tuple[int, ...], m: int) -> int:
    """Move the bit of vertex i to vertex gamma[i]."""
    out = 0
    for i in range(m):
        if (x >> (m - 1 - i)) & 1:
            out |= 1 << (m - 1 - gamma[i])
    return out


def apply_right(y: int, gamma, beta, graph: DominationGraph, w: int) -> int:
    """beta first, then rearrange the per-vertex subwords according to gamma."""
    n = graph.n
    spans = _block_spans(graph)
    yb = unrank(beta[rank(y, n, w)], n, w)
    out = 0
    for i, (start, length) in enumerate(spans):
        sub = (yb >> (n - start - length)) & ((1 << length) - 1)
        tstart, tlength = spans[gamma[i]]
        if tlength != length:
            raise DomainError("gamma mixes degree classes")
        out |= sub << (n - tstart - tlength)
    return out


def edge_permutation(program: FullProgram, gamma, beta) -> tuple[int, ...]:
    """pi with pi[k] = index of the image of edge k; images always exist."""
    graph, w = program.graph, program.w
    n = graph.n
    index = {e: k for k, e in enumerate(program.edges)}
    out = []
    for x, r in program.edges:
        y = unrank(r, n, w)
        x2 = apply_gamma_word(x, gamma, graph.m)
        y2 = apply_right(y, gamma, beta, graph, w)
        assert dominates(x2, y2, graph)
        out.append(index[(x2, rank(y2, n, w))])
    return tuple(out)


def permute_vector(x, pi):
    """x^pi with (x^pi)_k = x_{pi(k)}."""
    return [x[pi[k]] for k in range(len(x))]


def edge_permutations(program: FullProgram, group) -> list[tuple[int, ...]]:
    return [edge_permutation(program, g, b) for g, b in group]


def edge_orbits(program: FullProgram, perms) -> list[list[int]]:
    """Orbits of edge indices under the listed permutations, first-seen order."""
    seen = [False] * len(program.edges)
    orbits = []
    for k in range(len(program.edges)):
        if seen[k]:
            continue
        orbit = set()
        frontier = {k}
        while frontier:
            nxt = set()
            for e in frontier:
                if e not in orbit:
                    orbit.add(e)
                    for pi in perms:
                        nxt.add(pi[e])
            frontier = nxt - orbit
        for e in orbit:
            seen[e] = True
        orbits.append(sorted(orbit))
    return orbits


def orbit_label(program: FullProgram, edge_index: int) -> OrbitIndex:
    """Classify an edge by the weight quadruple indexing its orbit."""
    graph, w = program.graph, program.w
    split = EquitableSplit.for_params(graph.m, graph.n)
    x, r = program.edges[edge_index]
    y = unrank(r, graph.n, w)
    s1 = sum(1 for i in range(split.m1) if (x >> (graph.m - 1 - i)) & 1)
    s2 = x.bit_count() - s1
    supp = _block_support(y, graph)
    r1 = sum(1 for i in supp if i < split.m1)
    r2 = len(supp) - r1
    return OrbitIndex(s1, s2, r1, r2)


def average_over_group(x, perms):
    """The group average of x^pi; feasible, same objective, orbit-constant."""
    total = [Fraction(0)] * len(x)
    for pi in perms:
        for k in range(len(x)):
            total[k] += x[pi[k]]
    scale = Fraction(1, len(perms))
    return [v * scale for v in total]
