"""Binary words as integers.

A word of length n is stored as a plain int in [0, 2**n).  Position 1 of
the word is the most significant bit, so the string form reads left to
right and the integer value of a word equals int(str_form, 2).  This
convention makes the lookup table of a mapping indexable by the integer
value of the domain word.
"""

from __future__ import annotations

from .errors import DimensionError, DomainError


def weight(x: int) -> int:
    """Hamming weight (number of nonzero positions)."""
    return x.bit_count()


def word_to_str(x: int, length: int) -> str:
    if not 0 <= x < (1 << length):
        raise DimensionError(f"word {x} does not fit in {length} positions")
    return format(x, f"0{length}b")


def word_from_str(s: str) -> tuple[int, int]:
    """Parse a bitstring, returning (value, length)."""
    if not s or any(c not in "01" for c in s):
        raise DomainError(f"not a bitstring: {s!r}")
    return int(s, 2), len(s)


def bit(x: int, i: int, length: int) -> int:
    """Value of position i (1-based, position 1 most significant)."""
    if not 1 <= i <= length:
        raise DimensionError(f"position {i} outside [1, {length}]")
    return (x >> (length - i)) & 1


def position_mask(i: int, length: int) -> int:
    """Mask with a single one at position i (1-based)."""
    if not 1 <= i <= length:
        raise DimensionError(f"position {i} outside [1, {length}]")
    return 1 << (length - i)


def support(x: int, length: int) -> tuple[int, ...]:
    """Positions (1-based) carrying a one, in increasing order."""
    return tuple(i for i in range(1, length + 1) if (x >> (length - i)) & 1)


def is_descendant(u: int, v: int) -> bool:
    """True iff u has a zero wherever v has a zero (u covered by v)."""
    return u & ~v == 0


def proper_descendants(u: int):
    """All words strictly below u in the descendant order."""
    s = u
    while s:
        s = (s - 1) & u
        yield s


def iter_words(m: int):
    """All words of length m in increasing integer order."""
    return range(1 << m)
