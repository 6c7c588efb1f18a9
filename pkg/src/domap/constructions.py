"""Explicit constructions of domination mappings.

Covers the identity map, the two monotonicity moves (length extension and
radius relaxation), shortening at a left vertex, the product of two
mappings, the perfect radius-1 family, and the recursive radius-2 family
for odd m.
"""

from __future__ import annotations

from .ball import ball_size
from .errors import ConstructionError, DegenerateError, DomainError
from .graphs import DominationGraph
from .mapping import DominationMapping, verify_mapping

EXAMPLE_342_TABLE = (0b0000, 0b0001, 0b0010, 0b0011, 0b0100, 0b0101, 0b1000, 0b1001)


def example_342() -> DominationMapping:
    """The classic (3, 4, 2) mapping; base case of the radius-2 recursion."""
    graph = DominationGraph.from_degrees((2, 1, 1))
    return DominationMapping(3, 4, 2, graph, EXAMPLE_342_TABLE)


def identity_mapping(m: int) -> DominationMapping:
    """(m, m, m): every coordinate dominates itself."""
    if m < 1:
        raise DomainError("m must be positive")
    graph = DominationGraph.from_degrees((1,) * m)
    return DominationMapping(m, m, m, graph, tuple(range(1 << m)))


def extend_n(mapping: DominationMapping) -> DominationMapping:
    """Append a zero position, attached to the last left vertex."""
    owners = mapping.graph.owners + (mapping.m - 1,)
    graph = DominationGraph(mapping.m, mapping.n + 1, owners)
    table = tuple(y << 1 for y in mapping.table)
    return DominationMapping(mapping.m, mapping.n + 1, mapping.w, graph, table)


def relax_w(mapping: DominationMapping) -> DominationMapping:
    """Same table viewed inside the next larger ball."""
    return DominationMapping(
        mapping.m, mapping.n, mapping.w + 1, mapping.graph, mapping.table
    )


def shorten(mapping: DominationMapping, i: int) -> DominationMapping:
    """Fix x_i = 0 and delete the block of left vertex i (1-based)."""
    m, n = mapping.m, mapping.n
    if m < 2:
        raise DegenerateError("cannot shorten a single-vertex mapping")
    if not 1 <= i <= m:
        raise DomainError(f"vertex {i} outside [1, {m}]")
    keep = [j for j in range(n) if mapping.graph.owners[j] != i - 1]
    owners = tuple(
        o if o < i - 1 else o - 1
        for o in (mapping.graph.owners[j] for j in keep)
    )
    graph = DominationGraph(m - 1, len(keep), owners)

    def insert_zero(x: int) -> int:
        high = x >> (m - i)
        low = x & ((1 << (m - i)) - 1)
        return (high << (m - i + 1)) | low  # the fixed zero at position i

    def squeeze(y: int) -> int:
        out = 0
        for new_j, old_j in enumerate(keep):
            out |= ((y >> (n - 1 - old_j)) & 1) << (len(keep) - 1 - new_j)
        return out

    table = tuple(
        squeeze(mapping.table[insert_zero(xp)]) for xp in range(1 << (m - 1))
    )
    return DominationMapping(m - 1, len(keep), mapping.w, graph, table)


def product(f: DominationMapping, g: DominationMapping) -> DominationMapping:
    """(m1+m2, n1+n2, w1+w2) by concatenating domains and images."""
    m, n, w = f.m + g.m, f.n + g.n, f.w + g.w
    owners = f.graph.owners + tuple(o + f.m for o in g.graph.owners)
    graph = DominationGraph(m, n, owners)
    table = tuple(
        (f.table[x >> g.m] << g.n) | g.table[x & ((1 << g.m) - 1)]
        for x in range(1 << m)
    )
    return DominationMapping(m, n, w, graph, table)


def w1_perfect(m: int) -> DominationMapping:
    """Perfect (m, 2**m - 1, 1): domain word j maps to the unit at position j.

    Position j is dominated by the most significant set coordinate of the
    binary representation of j, so vertex i owns the 2**(m-i) positions
    whose representation starts at coordinate i; the degrees are the
    powers of two below 2**m in reverse vertex order.
    """
    if m < 1:
        raise DomainError("m must be positive")
    n = (1 << m) - 1
    owners = tuple(m - j.bit_length() for j in range(1, n + 1))
    graph = DominationGraph(m, n, owners)
    table = (0,) + tuple(1 << (n - j) for j in range(1, n + 1))
    return DominationMapping(m, n, 1, graph, table)


def _quadrant_assignment(prev: DominationMapping):
    """Pair each previous-domain word with (unit column, extra unit or none).

    Used by the radius-2 recursion for the mixed quadrants: the row for
    old word r gets a unit in the active half of the new positions (column
    index u) and at most one unit in the old positions (column c), where c
    must lie in a block of supp(r).  Rows without an old unit are confined
    to the first quarter of the active half, clear of the unit rows used
    by the all-ones quadrant.  The pairing itself is a perfect matching,
    solved exactly.
    """
    from .matching import max_matching_csr

    mp, np_ = prev.m, prev.n
    half = np_ // 2
    q = half // 2
    n_left = 1 << mp
    # right vertex id: u * (np_ + 1) + (0 for none, 1 + c otherwise)
    pitch = np_ + 1
    indptr = [0]
    indices: list[int] = []
    owners = prev.graph.owners
    for r in range(n_left):
        row = []
        for u in range(q):
            row.append(u * pitch)
        for c in range(np_):
            if (r >> (mp - 1 - owners[c])) & 1:
                row.extend(u * pitch + 1 + c for u in range(half))
        row.sort()
        indices.extend(row)
        indptr.append(len(indices))
    result = max_matching_csr(n_left, half * pitch, indptr, indices)
    if result.size != n_left:
        raise ConstructionError("quadrant assignment has no perfect matching")
    pairs = []
    for r in range(n_left):
        v = result.left_match[r]
        u, rem = divmod(v, pitch)
        pairs.append((u, None if rem == 0 else rem - 1))
    return pairs


def w2_recursive(level: int) -> DominationMapping:
    """(2*level + 1, 2**(level + 1), 2) mapping for odd domain sizes.

    Level 1 is the (3, 4, 2) base.  Each step doubles the image length and
    splits on the two new leading coordinates: 00 embeds the previous
    mapping in the old positions; 11 spends all weight-two rows of the new
    positions plus designated unit rows; 01 and 10 combine one unit in
    their half of the new positions with at most one unit in the old ones.
    """
    if level < 1:
        raise DomainError("level must be at least 1")
    if level == 1:
        return example_342()
    prev = w2_recursive(level - 1)
    mp, np_ = prev.m, prev.n
    half, q = np_ // 2, np_ // 4
    m, n = mp + 2, 2 * np_

    # all-ones quadrant: every weight-2 word of the new positions, plus a
    # unit row in the last q columns of each half
    d2_rows = []
    for e1 in range(np_):
        for e2 in range(e1 + 1, np_):
            d2_rows.append((1 << e1) | (1 << e2))
    d2_rows.extend(1 << e for e in range(q))  # last q columns of second half
    d2_rows.extend(1 << e for e in range(half, half + q))  # of first half
    d2_rows.sort()
    if len(d2_rows) != 1 << mp:
        raise ConstructionError(
            f"all-ones quadrant has {len(d2_rows)} rows for {1 << mp} words"
        )

    pairs = _quadrant_assignment(prev)

    table = []
    for r in range(1 << mp):  # 00
        table.append(prev.table[r])
    for r in range(1 << mp):  # 01: unit in the second half of new positions
        u, c = pairs[r]
        b1 = 1 << (half - 1 - u)
        b2 = 0 if c is None else 1 << (np_ - 1 - c)
        table.append((b1 << np_) | b2)
    for r in range(1 << mp):  # 10: mirrored into the first half
        u, c = pairs[r]
        b1 = 1 << (np_ - 1 - u)
        b2 = 0 if c is None else 1 << (np_ - 1 - c)
        table.append((b1 << np_) | b2)
    for r in range(1 << mp):  # 11
        table.append(d2_rows[r] << np_)

    owners = (
        (0,) * half + (1,) * half + tuple(o + 2 for o in prev.graph.owners)
    )
    graph = DominationGraph(m, n, owners)
    mapping = DominationMapping(m, n, 2, graph, tuple(table))
    verdict = verify_mapping(mapping)
    if not verdict.ok:
        raise ConstructionError(f"recursion produced an invalid mapping: {verdict}")
    return mapping


def w2_degree_sequence(level: int) -> tuple[int, ...]:
    """Expected degree multiset at a recursion level, smallest first."""
    degs = [2, 1, 1]
    for ell in range(2, level + 1):
        degs = [1 << (ell - 1), 1 << (ell - 1)] + degs
    return tuple(sorted(degs))


def w2_slack(level: int) -> int:
    """|B(2**(l+1), 2)| - 2**(2l+1), the counting-condition slack."""
    n = 1 << (level + 1)
    return ball_size(n, 2) - (1 << (2 * level + 1))
