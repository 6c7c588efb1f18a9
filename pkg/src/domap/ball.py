"""Hamming ball enumeration, sizes, and rank/unrank.

The canonical order of the ball B(n, w) is increasing weight, then
increasing integer value within each weight class (equivalently,
lexicographic order of the bitstrings with position 1 most significant).
Within a weight class the rank is the colex rank of the set of bit
exponents, so both directions run in O(w) per word after a table of
binomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DomainError


def ball_size(n: int, w: int) -> int:
    """|B(n, w)| = sum_{j<=w} C(n, j); w > n counts the whole cube."""
    if n < 1:
        raise DomainError(f"length must be positive, got {n}")
    if w < 0:
        raise DomainError(f"radius must be nonnegative, got {w}")
    if w >= n:
        return 1 << n
    return sum(comb(n, j) for j in range(w + 1))


@dataclass(frozen=True)
class BallParams:
    """Length and radius of a Hamming ball."""

    n: int
    w: int

    def __post_init__(self) -> None:
        ball_size(self.n, self.w)  # validates

    @property
    def size(self) -> int:
        return ball_size(self.n, self.w)


def iter_weight_class(n: int, k: int):
    """Weight-k words of length n in increasing integer order (Gosper)."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    limit = 1 << n
    val = (1 << k) - 1
    while val < limit:
        yield val
        low = val & -val
        ripple = val + low
        val = ripple | (((val ^ ripple) >> 2) // low)


def iter_ball(n: int, w: int):
    """All of B(n, w) in canonical order."""
    for k in range(min(w, n) + 1):
        yield from iter_weight_class(n, k)


def rank(y: int, n: int, w: int) -> int:
    """Canonical index of y within B(n, w)."""
    k = y.bit_count()
    if k > w:
        raise DomainError(f"word of weight {k} outside ball of radius {w}")
    if y >> n:
        raise DomainError(f"word {y} does not fit in {n} positions")
    base = sum(comb(n, j) for j in range(k))
    r = 0
    rest = y
    j = 1
    while rest:
        e = (rest & -rest).bit_length() - 1
        r += comb(e, j)
        j += 1
        rest &= rest - 1
    return base + r


def unrank(r: int, n: int, w: int) -> int:
    """Inverse of rank over [0, ball_size(n, w))."""
    if not 0 <= r < ball_size(n, w):
        raise DomainError(f"rank {r} outside [0, {ball_size(n, w)})")
    k = 0
    while k <= min(w, n):
        c = comb(n, k)
        if r < c:
            break
        r -= c
        k += 1
    y = 0
    for j in range(k, 0, -1):
        # largest exponent e with C(e, j) <= r
        e = j - 1
        while comb(e + 1, j) <= r:
            e += 1
        r -= comb(e, j)
        y |= 1 << e
    return y
