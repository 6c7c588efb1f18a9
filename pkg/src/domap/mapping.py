"""Mapping tables, the verifier, descendant arrays, and .dmap files.

A mapping is a table of 2**m images indexed by the integer value of the
domain word.  The verifier checks the four defining invariants in a fixed
order (injectivity, image weight, the domination condition, and the forced
all-zero image of 0) and reports the first violation with a witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (
    ConversionError,
    DecodeError,
    DimensionError,
    DomainError,
    ParseError,
)
from .graphs import DominationGraph
from .words import weight, word_to_str

ACCEPT = "ACCEPT"
REJECT = "REJECT"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: Optional[str] = None
    witness: Optional[tuple] = None

    def __str__(self) -> str:
        if self.ok:
            return ACCEPT
        return f"{REJECT} {self.reason} witness={self.witness}"


@dataclass(frozen=True)
class DominationMapping:
    """An (m, n, w) table together with the graph it is checked against."""

    m: int
    n: int
    w: int
    graph: DominationGraph
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.graph.m != self.m or self.graph.n != self.n:
            raise DimensionError("graph shape does not match mapping parameters")
        if self.w < 0:
            raise DomainError("radius must be nonnegative")
        if len(self.table) != 1 << self.m:
            raise DimensionError(
                f"table has {len(self.table)} rows, expected {1 << self.m}"
            )
        if any(not 0 <= y < (1 << self.n) for y in self.table):
            raise DimensionError(f"image does not fit in {self.n} positions")

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.m, self.n, self.w)

    def image(self, x: int) -> int:
        return self.table[x]

    def is_perfect(self) -> bool:
        """Bijection onto the whole ball."""
        from .ball import ball_size

        return len(set(self.table)) == len(self.table) == ball_size(self.n, self.w)


def encode(mapping: DominationMapping, x: int) -> int:
    """Table lookup."""
    if not 0 <= x < (1 << mapping.m):
        raise DimensionError(f"word {x} does not fit in {mapping.m} positions")
    return mapping.table[x]


def decode(mapping: DominationMapping, y: int) -> int:
    """Inverse lookup; injectivity makes the preimage unique when it exists."""
    try:
        return mapping.table.index(y)
    except ValueError:
        raise DecodeError(
            f"{word_to_str(y, mapping.n)} is not in the image"
        ) from None


def verify_mapping(mapping: DominationMapping) -> Verdict:
    """Check all invariants against the mapping's own graph."""
    return verify_table(
        mapping.m,
        mapping.n,
        mapping.w,
        mapping.table,
        mapping.graph.edges(),
    )


def verify_table(
    m: int, n: int, w: int, table, edges
) -> Verdict:
    """Check a table against an explicit edge set (left, right), 1-based.

    The edge set may have right vertices of degree above one (extra edges
    only strengthen the domination requirement), but every right vertex
    must be covered, since an isolated right position is never switched
    off by the domain.
    """
    table = tuple(table)
    if len(table) != 1 << m:
        raise DimensionError(f"table has {len(table)} rows, expected {1 << m}")
    covered = set()
    by_left: list[int] = [0] * m
    for i, j in edges:
        if not (1 <= i <= m and 1 <= j <= n):
            raise DimensionError(f"edge ({i}, {j}) outside [1,{m}] x [1,{n}]")
        covered.add(j)
        by_left[i - 1] |= 1 << (n - j)
    if len(covered) != n:
        raise DomainError("edge set leaves a right position undominated")

    seen: dict[int, int] = {}
    for x, y in enumerate(table):
        if y in seen:
            return Verdict(False, "duplicate-image", (seen[y], x))
        seen[y] = x
    for x, y in enumerate(table):
        if weight(y) > w:
            return Verdict(False, "overweight-image", (x, y))
    for x, y in enumerate(table):
        for i in range(1, m + 1):
            if (x >> (m - i)) & 1 == 0 and y & by_left[i - 1]:
                return Verdict(False, "domination", (x, i))
    if table[0] != 0:
        return Verdict(False, "nonzero-at-zero", (0, table[0]))
    return Verdict(True)


@dataclass(frozen=True)
class DescendantArrayPair:
    """A: all 2**m domain words in lexicographic order; B: their images."""

    A: np.ndarray
    B: np.ndarray

    def __post_init__(self) -> None:
        if self.A.ndim != 2 or self.B.ndim != 2 or self.A.shape[0] != self.B.shape[0]:
            raise DimensionError("descendant arrays need matching row counts")

    @property
    def m(self) -> int:
        return self.A.shape[1]

    @property
    def n(self) -> int:
        return self.B.shape[1]


def to_descendant_arrays(mapping: DominationMapping) -> DescendantArrayPair:
    m, n = mapping.m, mapping.n
    rows = 1 << m
    A = np.zeros((rows, m), dtype=np.uint8)
    B = np.zeros((rows, n), dtype=np.uint8)
    for x in range(rows):
        for i in range(m):
            A[x, i] = (x >> (m - 1 - i)) & 1
        y = mapping.table[x]
        for j in range(n):
            B[x, j] = (y >> (n - 1 - j)) & 1
    return DescendantArrayPair(A, B)


def from_descendant_arrays(pair: DescendantArrayPair, w: int) -> DominationMapping:
    """Rebuild a mapping, assigning each B-column its lowest dominating A-column."""
    m, n = pair.m, pair.n
    rows = 1 << m
    A, B = np.asarray(pair.A), np.asarray(pair.B)
    if A.shape[0] != rows:
        raise ConversionError(f"A must have {rows} rows")
    expected = np.array(
        [[(x >> (m - 1 - i)) & 1 for i in range(m)] for x in range(rows)],
        dtype=A.dtype,
    )
    if not np.array_equal(A, expected):
        raise ConversionError("A is not the lexicographic matrix of all words")
    table = tuple(int("".join(map(str, row)), 2) for row in B.astype(int))
    if len(set(table)) != rows:
        raise ConversionError("rows of B are not pairwise distinct")
    if any(weight(y) > w for y in table):
        raise ConversionError(f"a row of B has weight above {w}")
    owners = []
    for j in range(n):
        col = B[:, j]
        dominating = [i for i in range(m) if np.all(A[:, i] >= col)]
        if not dominating:
            raise ConversionError(f"no column of A dominates column {j + 1} of B")
        owners.append(dominating[0])
    graph = DominationGraph(m, n, tuple(owners))
    return DominationMapping(m, n, w, graph, table)


def block_sorted(mapping: DominationMapping) -> DominationMapping:
    """Relabel right positions so blocks become consecutive in vertex order.

    The result is an isomorphic mapping with the same parameters and degree
    multiset; it is what the .dmap format can express.
    """
    n = mapping.n
    order = sorted(range(n), key=lambda j: (mapping.graph.owners[j], j))
    if order == list(range(n)):
        return mapping
    table = []
    for y in mapping.table:
        z = 0
        for new_j, old_j in enumerate(order):
            z |= ((y >> (n - 1 - old_j)) & 1) << (n - 1 - new_j)
        table.append(z)
    owners = tuple(mapping.graph.owners[j] for j in order)
    graph = DominationGraph(mapping.m, n, owners)
    return DominationMapping(mapping.m, n, mapping.w, graph, tuple(table))


def format_mapping(mapping: DominationMapping) -> str:
    """Serialize in the .dmap layout (degrees line implies consecutive blocks)."""
    mapping = block_sorted(mapping)
    lines = [
        f"{mapping.m} {mapping.n} {mapping.w}",
        " ".join(str(d) for d in mapping.graph.degrees),
    ]
    for x, y in enumerate(mapping.table):
        lines.append(f"{word_to_str(x, mapping.m)} {word_to_str(y, mapping.n)}")
    return "\n".join(lines) + "\n"


def save_mapping(mapping: DominationMapping, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_mapping(mapping))


def parse_mapping(text: str) -> DominationMapping:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise ParseError("file too short")
    try:
        m, n, w = (int(t) for t in lines[0].split())
        degrees = tuple(int(t) for t in lines[1].split())
    except ValueError as exc:
        raise ParseError(f"bad header: {exc}") from None
    if len(degrees) != m:
        raise ParseError(f"{len(degrees)} degrees for m={m}")
    if sum(degrees) != n:
        raise ParseError(f"degrees sum to {sum(degrees)}, expected n={n}")
    rows = lines[2:]
    if len(rows) != 1 << m:
        raise ParseError(f"{len(rows)} rows, expected {1 << m}")
    table = []
    images = set()
    for k, row in enumerate(rows):
        parts = row.split()
        if len(parts) != 2:
            raise ParseError(f"row {k}: expected 'X Y'")
        xs, ys = parts
        if len(xs) != m or len(ys) != n:
            raise ParseError(f"row {k}: wrong word lengths")
        if set(xs) - {"0", "1"} or set(ys) - {"0", "1"}:
            raise ParseError(f"row {k}: bad alphabet")
        if int(xs, 2) != k:
            raise ParseError(f"row {k}: domain words out of order")
        y = int(ys, 2)
        if y in images:
            raise ParseError(f"row {k}: duplicate image {ys}")
        images.add(y)
        table.append(y)
    graph = DominationGraph.from_degrees(degrees)
    return DominationMapping(m, n, w, graph, tuple(table))


def load_mapping(path) -> DominationMapping:
    with open(path, encoding="ascii") as fh:
        return parse_mapping(fh.read())
