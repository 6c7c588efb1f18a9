"""Computable ingredients of the large-m existence argument.

The additional neighbourhood Psi(v) counts ball words whose nonzero
blocks are exactly the support of v; Xi measures neighbourhood growth;
the closure procedure turns any Hall violator into a descendant-closed
one of the same size.  The two sufficient numerical conditions for
existence at equitable degree delta are evaluated exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, log

from .ball import ball_size, iter_ball
from .errors import DomainError, ResourceError
from .graphs import DominationGraph
from .words import proper_descendants, weight

SubsetFamily = frozenset


def _block_support_mask(y: int, graph: DominationGraph) -> int:
    """Word over [m] marking the blocks where y is nonzero."""
    m = graph.m
    out = 0
    for i, mask in enumerate(graph.block_masks):
        if y & mask:
            out |= 1 << (m - 1 - i)
    return out


def psi(v: int, graph: DominationGraph, w: int) -> int:
    """Ball words dominated by v but by no proper descendant of v.

    Equivalently the words whose nonzero blocks are exactly supp(v):
    the truncated product over the blocks of v of their nonempty-pattern
    series, summed up to total weight w.
    """
    if weight(v) > w:
        return 0
    poly = [1] + [0] * w
    m = graph.m
    for i in range(m):
        if (v >> (m - 1 - i)) & 1:
            d = graph.degrees[i]
            block = [comb(d, k) if k >= 1 else 0 for k in range(w + 1)]
            nxt = [0] * (w + 1)
            for a, pa in enumerate(poly):
                if pa:
                    for b in range(1, w + 1 - a):
                        nxt[a + b] += pa * block[b]
            poly = nxt
    return sum(poly)


def psi_brute(v: int, graph: DominationGraph, w: int) -> int:
    """Direct scan of the ball; oracle for psi."""
    count = 0
    for y in iter_ball(graph.n, w):
        if _block_support_mask(y, graph) == v:
            count += 1
    return count


def psi_all_brute(graph: DominationGraph, w: int) -> dict[int, int]:
    """One ball scan tallying every exact block-support pattern at once."""
    counts: dict[int, int] = {}
    for y in iter_ball(graph.n, w):
        key = _block_support_mask(y, graph)
        counts[key] = counts.get(key, 0) + 1
    return counts


def psi_family(vs, graph: DominationGraph, w: int) -> int:
    return sum(psi(v, graph, w) for v in vs)


def neighborhood_mask(xs, graph: DominationGraph, w: int) -> int:
    """Bitset over ball ranks of N(X)."""
    from .graphs import iter_dominated

    out = 0
    for x in xs:
        for r in iter_dominated(x, graph, w):
            out |= 1 << r
    return out


def neighborhood_size(xs, graph: DominationGraph, w: int) -> int:
    return neighborhood_mask(xs, graph, w).bit_count()


def xi(us, vs, graph: DominationGraph, w: int) -> int:
    """|N(U u V)| - |N(U)| by direct counting."""
    us, vs = frozenset(us), frozenset(vs)
    return neighborhood_size(us | vs, graph, w) - neighborhood_size(us, graph, w)


def is_d_closed(xs, m: int) -> bool:
    xs = frozenset(xs)
    for u in xs:
        for v in proper_descendants(u):
            if v not in xs:
                return False
    return True


def is_i_balanced(xs, m: int, i: int) -> bool:
    """Membership depends only on the last m - i coordinates of the prefix class."""
    if i == 0:
        return True
    xs = frozenset(xs)
    shift = m - i
    for u in xs:
        tail = u & ((1 << shift) - 1)
        for head in range(1 << i):
            if (head << shift) | tail not in xs:
                return False
    return True


def closure(xs, m: int) -> frozenset:
    """Swap elements downward until descendant-closed; size is preserved.

    Each step removes a word with a missing proper descendant and inserts
    that descendant, which never grows the neighbourhood, so a Hall
    violator stays a Hall violator.
    """
    current = set(xs)
    while True:
        swap = None
        for u in sorted(current, key=lambda t: (weight(t), t)):
            for v in sorted(proper_descendants(u), key=lambda t: (weight(t), t)):
                if v not in current:
                    swap = (u, v)
                    break
            if swap:
                break
        if swap is None:
            return frozenset(current)
        u, v = swap
        current.remove(u)
        current.add(v)


def iter_d_closed_sets(m: int, cap: int = 1 << 16):
    """All descendant-closed subsets of {0,1}^m (down-sets of the cube).

    DFS over words in a linear extension of the descendant order; a word
    may join only if all its one-bit-removed descendants are present.
    """
    words = sorted(range(1 << m), key=lambda t: (weight(t), t))
    produced = 0

    def rec(idx: int, current: frozenset):
        nonlocal produced
        if idx == len(words):
            produced += 1
            if produced > cap:
                raise ResourceError(f"more than {cap} descendant-closed sets")
            yield current
            return
        u = words[idx]
        yield from rec(idx + 1, current)
        ok = True
        t = u
        while t:
            low = t & -t
            if u ^ low not in current:
                ok = False
                break
            t ^= low
        if ok:
            yield from rec(idx + 1, current | {u})
    yield from rec(0, frozenset())


def minimum_bad_sets(
    graph: DominationGraph, w: int, balanced: int = 0, cap: int = 1 << 16
):
    """Smallest descendant-closed, i-balanced Hall violators, or [].

    Searching d-closed families only is enough: the closure procedure
    turns any violator into a d-closed one of equal size.
    """
    m = graph.m
    best: list[frozenset] = []
    best_size = None
    masks = {x: neighborhood_mask([x], graph, w) for x in range(1 << m)}
    for xs in iter_d_closed_sets(m, cap=cap):
        if not xs:
            continue
        if best_size is not None and len(xs) > best_size:
            continue
        if balanced and not is_i_balanced(xs, m, balanced):
            continue
        nb = 0
        for x in xs:
            nb |= masks[x]
        if nb.bit_count() < len(xs):
            if best_size is None or len(xs) < best_size:
                best, best_size = [xs], len(xs)
            elif len(xs) == best_size:
                best.append(xs)
    return best


def maximal_support_words(xs) -> frozenset:
    """Members of X with no proper ancestor inside X."""
    xs = frozenset(xs)
    out = set()
    for u in xs:
        if not any(u != v and u & ~v == 0 for v in xs):
            out.add(u)
    return frozenset(out)


def check_cond1(m: int, delta: int, w: int) -> bool:
    """delta**w >= 2**(2w-1) * sum_{j<w} C(m-w, j), exactly."""
    if m < w or delta < 0 or w < 1:
        raise DomainError("need m >= w >= 1 and delta >= 0")
    rhs = (1 << (2 * w - 1)) * sum(comb(m - w, j) for j in range(w))
    return delta**w >= rhs


def least_delta_cond1(m: int, w: int) -> int:
    """Smallest integer delta satisfying the condition above."""
    rhs = (1 << (2 * w - 1)) * sum(comb(m - w, j) for j in range(w))
    d = 1
    while d**w < rhs:
        d += 1
    return d


def n_epsilon(epsilon: Fraction) -> int:
    """Least N with m**(eps/(1+eps)) >= 1 + ln(m) for all m >= N.

    Natural logarithm, float evaluation in log space.  The combined test
    "inequality holds and the left side is already growing at least as
    fast as the right" is monotone in m (below the derivative threshold
    the inequality side is still shrinking), so a binary search applies.
    """
    e = float(epsilon)
    a = e / (1.0 + e)

    def good(m: int) -> bool:
        lm = log(m)
        return a * lm >= log(1.0 + lm) and log(a) + a * lm >= 0.0

    hi = 2
    while not good(hi):
        hi *= 2
        if hi > 1 << 62:
            raise ResourceError("epsilon too small for a practical threshold")
    lo = 1
    while lo < hi:
        mid = (lo + hi) // 2
        if mid >= 2 and good(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def check_cond2(m: int, delta: int, w: int, epsilon) -> bool:
    """m clears both thresholds and the counting condition holds at n = delta*m."""
    if w < 3:
        raise DomainError("the sufficient condition is stated for w >= 3")
    eps = Fraction(epsilon).limit_denominator(10**6)
    if eps <= 0:
        raise DomainError("epsilon must be positive")
    # m >= (2w)^(1+eps)  <=>  m^q >= (2w)^(p+q) with eps = p/q, exactly
    p, q = eps.numerator, eps.denominator
    if m**q < (2 * w) ** (p + q):
        return False
    if m < n_epsilon(eps):
        return False
    return (1 << m) <= ball_size(delta * m, w)
