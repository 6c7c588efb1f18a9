"""Necessary conditions and two-sided bounds on the least feasible length.

nu(m, w) is the least n admitting an (m, n, w) mapping and mu(n, w) the
largest feasible m.  The lower bound combines the counting condition
2**m <= |B(n, w)| with n >= 2m - w; the upper bound is a dynamic program
over the product construction seeded with known-good triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ball import ball_size
from .errors import DomainError
from .graphs import DominationGraph

UNREACHABLE = None  # upper-bound marker for parameters outside the base closure


def check_sum_condition(m: int, n: int, w: int) -> bool:
    """2**m <= |B(n, w)| (exact arithmetic)."""
    return (1 << m) <= ball_size(n, w)


def check_tight_condition(m: int, n: int, w: int) -> bool:
    """n >= 2m - w."""
    return n >= 2 * m - w


def general_bound_value(graph: DominationGraph, w: int) -> int:
    """Largest m' passing the shortening bound for this degree sequence.

    For each count s of removed left vertices the bound is sharpest when
    the s largest degrees are removed, so the minimization reduces to at
    most m terms: value = min_s (s + floor(log2 |B(n - mass_s, w)|)).
    """
    degrees = sorted(graph.degrees, reverse=True)
    n = graph.n
    best = None
    removed = 0
    for s in range(graph.m):
        remaining = n - removed
        term = s + ball_size(remaining, w).bit_length() - 1
        best = term if best is None else min(best, term)
        removed += degrees[s]
    return best


def general_bound(m: int, w: int, graph: DominationGraph) -> bool:
    """True iff m passes the shortening bound for this graph."""
    if graph.m != m:
        raise DomainError(f"graph has {graph.m} left vertices, expected {m}")
    return m <= general_bound_value(graph, w)


def optimal_degree_distribution(m: int, n: int, w: int) -> bool:
    """True iff n = 2m - w, which forces d_1 = w and d_2 = m - w."""
    return n == 2 * m - w and 1 <= w <= m


def min_length_by_counting(m: int, w: int) -> int:
    """Least n with 2**m <= |B(n, w)| (binary search, exact)."""
    lo, hi = 1, max(m, 1)
    while not check_sum_condition(m, hi, w):
        lo, hi = hi + 1, hi * 2
    while lo < hi:
        mid = (lo + hi) // 2
        if check_sum_condition(m, mid, w):
            hi = mid
        else:
            lo = mid + 1
    return lo


def nu_lower_bound(m: int, w: int) -> int:
    """max of the counting bound and 2m - w."""
    if m < 1 or w < 1:
        raise DomainError("m and w must be positive")
    return max(min_length_by_counting(m, w), 2 * m - w)


# Known feasible triples: identity maps for m <= w, the radius-1 and
# radius-2 families, the computer-search triples behind the (3w, 5w, w)
# products, and the (13, 22, 4) mapping quoted with degree distribution
# (4, 9).  Radius-2 values for even m are the computer-search sequence;
# odd m = 2l+1 attains 2**(l+1).
_W2_EVEN = {
    4: 6, 6: 11, 8: 23, 10: 45, 12: 90, 14: 181, 16: 362, 18: 724,
    20: 1448, 22: 2896, 24: 5793, 26: 11585, 28: 23170,
}


def default_base() -> dict[tuple[int, int], int]:
    base: dict[tuple[int, int], int] = {}
    for m in range(1, 31):
        for w in range(m, 31):
            base[(m, w)] = m  # identity map, radius relaxed
    for m in range(1, 27):
        base[(m, 1)] = (1 << m) - 1
    for m, n in _W2_EVEN.items():
        base[(m, 2)] = n
    for ell in range(1, 14):
        base[(2 * ell + 1, 2)] = 1 << (ell + 1)
    # length 2m - w is achievable throughout w <= m <= 3w for w >= 3, by
    # shortening degree-2 vertices out of the (3w, 5w, w) product mappings
    for w in range(3, 31):
        for m in range(w, min(3 * w, 30) + 1):
            base[(m, w)] = 2 * m - w
    base[(13, 4)] = 22
    return base


def nu_upper_bound(m: int, w: int, base: dict[tuple[int, int], int] | None = None):
    """Least n achievable by products of base triples; None if unreachable."""
    if base is None:
        base = default_base()

    @lru_cache(maxsize=None)
    def best(mm: int, ww: int):
        out = base.get((mm, ww))
        for m1 in range(1, mm):
            for w1 in range(1, ww):
                a = best(m1, w1)
                b = best(mm - m1, ww - w1)
                if a is not None and b is not None:
                    cand = a + b
                    out = cand if out is None else min(out, cand)
        return out

    return best(m, w)


def mu_of_w1(n: int) -> int:
    """Largest m with 2**m - 1 <= n, i.e. floor(log2(n + 1)).

    The ceiling form sometimes quoted for this quantity overshoots by one
    whenever n + 1 is not a power of two (e.g. n = 4 admits m = 2, not 3);
    the floor form agrees with the matching decision on every instance.
    """
    if n < 1:
        raise DomainError("n must be positive")
    return (n + 1).bit_length() - 1


@dataclass(frozen=True)
class BoundReport:
    m: int
    n: int
    w: int
    sum_condition_ok: bool
    tight_condition_ok: bool
    general_bound_value: int
    perfect: bool

    @classmethod
    def for_params(cls, m: int, n: int, w: int) -> "BoundReport":
        graph = DominationGraph.equitable(m, n) if n >= m else None
        value = general_bound_value(graph, w) if graph is not None else -1
        return cls(
            m=m,
            n=n,
            w=w,
            sum_condition_ok=check_sum_condition(m, n, w),
            tight_condition_ok=check_tight_condition(m, n, w),
            general_bound_value=value,
            perfect=(1 << m) == ball_size(n, w),
        )

    def as_tsv(self) -> str:
        return "\t".join(
            str(v)
            for v in (
                self.m,
                self.n,
                self.w,
                int(self.sum_condition_ok),
                int(self.tight_condition_ok),
                self.general_bound_value,
                int(self.perfect),
            )
        )
