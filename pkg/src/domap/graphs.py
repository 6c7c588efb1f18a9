"""Domination graphs with unit right-degree.

After the standard normalization (every right vertex keeps exactly one of
its edges), a domination graph on [m] u [n] is a function assigning each
right position to the left vertex that dominates it.  The assignment is
stored explicitly because natural graphs are not always "blocks in vertex
order": relabelled graphs for a fixed table, and the radius-1 perfect
construction, assign consecutive position blocks to vertices in arbitrary
order.  Graphs built from a degree sequence use consecutive blocks: vertex
1 owns positions 1..d_1, vertex 2 the next d_2, and so on.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb

from .errors import DimensionError, DomainError


@dataclass(frozen=True)
class DominationGraph:
    """m left vertices, n right positions, owners[j] = left vertex of position j+1."""

    m: int
    n: int
    owners: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise DomainError("m and n must be positive")
        if len(self.owners) != self.n:
            raise DimensionError(f"{len(self.owners)} owners for {self.n} positions")
        if any(not 0 <= o < self.m for o in self.owners):
            raise DomainError("owner index outside [0, m)")
        if len(set(self.owners)) != self.m:
            raise DomainError("isolated left vertex: no mapping can exist")

    @classmethod
    def from_degrees(cls, degrees) -> "DominationGraph":
        """Consecutive blocks in vertex order; degrees in any order."""
        degrees = tuple(degrees)
        if any(d < 1 for d in degrees):
            raise DomainError("every left degree must be at least 1")
        owners: list[int] = []
        for i, d in enumerate(degrees):
            owners.extend([i] * d)
        return cls(len(degrees), sum(degrees), tuple(owners))

    @classmethod
    def equitable(cls, m: int, n: int) -> "DominationGraph":
        """n mod m vertices of degree floor(n/m)+1 first, the rest floor(n/m)."""
        if n < m:
            raise DomainError(f"equitable graph needs n >= m, got ({m}, {n})")
        delta, m1 = divmod(n, m)
        return cls.from_degrees((delta + 1,) * m1 + (delta,) * (m - m1))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        counts = [0] * self.m
        for o in self.owners:
            counts[o] += 1
        return tuple(counts)

    @cached_property
    def block_masks(self) -> tuple[int, ...]:
        """block_masks[i] has ones exactly at the positions owned by vertex i."""
        masks = [0] * self.m
        for j, o in enumerate(self.owners):
            masks[o] |= 1 << (self.n - 1 - j)
        return tuple(masks)

    @property
    def is_equitable(self) -> bool:
        return max(self.degrees) - min(self.degrees) <= 1

    def degree_distribution(self) -> tuple[int, ...]:
        """(d_1, ..., d_Delta) with d_i = number of left vertices of degree i."""
        counts = Counter(self.degrees)
        top = max(counts)
        return tuple(counts.get(i, 0) for i in range(1, top + 1))

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """1-based positions per left vertex."""
        out: list[list[int]] = [[] for _ in range(self.m)]
        for j, o in enumerate(self.owners):
            out[o].append(j + 1)
        return tuple(tuple(b) for b in out)

    def edges(self) -> tuple[tuple[int, int], ...]:
        """(left, right) pairs, both 1-based, in right-position order."""
        return tuple((o + 1, j + 1) for j, o in enumerate(self.owners))

    def allowed_mask(self, x: int) -> int:
        """Positions that may be nonzero in an image of x."""
        if not 0 <= x < (1 << self.m):
            raise DimensionError(f"word {x} does not fit in {self.m} positions")
        mask = 0
        for i, bm in enumerate(self.block_masks):
            if (x >> (self.m - 1 - i)) & 1:
                mask |= bm
        return mask


def dominates(x: int, y: int, graph: DominationGraph) -> bool:
    """True iff every position of y outside the blocks of supp(x) is zero."""
    if not 0 <= y < (1 << graph.n):
        raise DimensionError(f"word {y} does not fit in {graph.n} positions")
    return y & ~graph.allowed_mask(x) == 0


def iter_dominated(x: int, graph: DominationGraph, w: int):
    """Ball ranks of all y in B(n, w) dominated by x, in increasing rank.

    Enumerates supports inside the allowed positions instead of scanning
    the whole ball, so the cost is proportional to the output size.  The
    rank of a weight-k word is the colex rank of its bit exponents offset
    by the sizes of the lighter weight classes.
    """
    n = graph.n
    allowed = graph.allowed_mask(x)
    exps = [e for e in range(n) if (allowed >> e) & 1]
    base = 0
    for k in range(min(w, n) + 1):
        if k > len(exps):
            break
        if k == 0:
            yield 0
        else:
            yield from sorted(
                base + sum(comb(e, j + 1) for j, e in enumerate(combo))
                for combo in combinations(exps, k)
            )
        base += comb(n, k)
