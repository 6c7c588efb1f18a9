"""Symmetry-reduced exact linear program for equitable-graph existence.

For the equitable graph, the fractional-matching program on the
compatibility graph collapses under the coordinate/block symmetry group:
edges (u, v) fall into orbits indexed by quadruples (s1, s2, r1, r2),
where (s1, s2) are the weights of u on the two degree classes and
(r1, r2) count the nonzero blocks of v in each class.  The reduced
program has one variable per orbit, one constraint per (s1, s2) and one
per (r1, r2), and its exact optimum equals the maximum matching size; a
mapping for the equitable graph exists iff the optimum is exactly 2**m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple

from .errors import DomainError
from .simplex import maximize


@dataclass(frozen=True)
class EquitableSplit:
    """Degree classes of the equitable graph: m1 blocks of size delta+1, m2 of size delta."""

    m: int
    n: int
    delta: int
    m1: int
    m2: int
    n1: int
    n2: int

    @classmethod
    def for_params(cls, m: int, n: int) -> "EquitableSplit":
        if m < 1 or n < m:
            raise DomainError(f"equitable split needs 1 <= m <= n, got ({m}, {n})")
        delta, m1 = divmod(n, m)
        m2 = m - m1
        return cls(m, n, delta, m1, m2, m1 * (delta + 1), m2 * delta)


class OrbitIndex(NamedTuple):
    s1: int
    s2: int
    r1: int
    r2: int


def _poly_mul(a: list[int], b: list[int], w: int) -> list[int]:
    out = [0] * (w + 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if i + j > w:
                    break
                out[i + j] += ai * bj
    return out


def coefficient_C(r1: int, r2: int, delta: int, w: int) -> int:
    """Words of the ball with fixed nonzero blocks: r1 of size delta+1, r2 of size delta.

    Generating-polynomial form of the composition sum: multiply the
    per-block weight series (without the empty term), truncate at w, and
    add up the coefficients.
    """
    if r1 < 0 or r2 < 0 or r1 + r2 > w:
        return 0
    poly = [1] + [0] * w
    big = [comb(delta + 1, k) if k >= 1 else 0 for k in range(w + 1)]
    small = [comb(delta, k) if k >= 1 else 0 for k in range(w + 1)]
    for _ in range(r1):
        poly = _poly_mul(poly, big, w)
    for _ in range(r2):
        poly = _poly_mul(poly, small, w)
    return sum(poly)


def omega(split: EquitableSplit, w: int) -> tuple[OrbitIndex, ...]:
    """Orbit index set in lexicographic order."""
    out = []
    for s1 in range(split.m1 + 1):
        for s2 in range(split.m2 + 1):
            for r1 in range(min(s1, w) + 1):
                for r2 in range(min(s2, w - r1) + 1):
                    out.append(OrbitIndex(s1, s2, r1, r2))
    return tuple(out)


def orbit_size(idx: OrbitIndex, split: EquitableSplit, w: int) -> int:
    s1, s2, r1, r2 = idx
    return (
        comb(split.m1, s1)
        * comb(split.m2, s2)
        * comb(s1, r1)
        * comb(s2, r2)
        * coefficient_C(r1, r2, split.delta, w)
    )


@dataclass(frozen=True)
class ReducedLP:
    split: EquitableSplit
    w: int
    variables: tuple[OrbitIndex, ...]
    objective: tuple[int, ...]  # orbit sizes
    s_rows: tuple[tuple[int, int], ...]
    r_rows: tuple[tuple[int, int], ...]
    astar: tuple[tuple[int, ...], ...]  # s_rows then r_rows

    @property
    def n_variables(self) -> int:
        return len(self.variables)


def build_reduced_lp(m: int, n: int, w: int) -> ReducedLP:
    split = EquitableSplit.for_params(m, n)
    variables = omega(split, w)
    objective = tuple(orbit_size(idx, split, w) for idx in variables)

    s_rows = tuple(
        (s1, s2) for s1 in range(split.m1 + 1) for s2 in range(split.m2 + 1)
    )
    r_rows = tuple(
        (r1, r2)
        for r1 in range(split.m1 + 1)
        for r2 in range(split.m2 + 1)
        if r1 + r2 <= w
    )

    cdelta = {}
    for idx in variables:
        key = (idx.r1, idx.r2)
        if key not in cdelta:
            cdelta[key] = coefficient_C(idx.r1, idx.r2, split.delta, w)

    rows = []
    for s1, s2 in s_rows:
        rows.append(
            tuple(
                comb(s1, v.r1) * comb(s2, v.r2) * cdelta[(v.r1, v.r2)]
                if (v.s1, v.s2) == (s1, s2)
                else 0
                for v in variables
            )
        )
    for r1, r2 in r_rows:
        rows.append(
            tuple(
                comb(split.m1 - r1, v.s1 - r1) * comb(split.m2 - r2, v.s2 - r2)
                if (v.r1, v.r2) == (r1, r2)
                else 0
                for v in variables
            )
        )
    return ReducedLP(split, w, variables, objective, s_rows, r_rows, tuple(rows))


def dump_astar(lp: ReducedLP) -> str:
    """Dense dump: first line 'rows cols', then integer rows."""
    lines = [f"{len(lp.astar)} {lp.n_variables}"]
    for row in lp.astar:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class LpSolution:
    optimum: Fraction
    values: tuple[Fraction, ...]


def solve_reduced_lp(lp: ReducedLP) -> LpSolution:
    """Exact optimum of the reduced program.

    The unit upper bounds on the variables are implied: every variable
    carries a positive coefficient in its own class row of the matrix, so
    they are not passed to the solver.
    """
    b = [1] * len(lp.astar)
    value, x = maximize(lp.objective, lp.astar, b)
    return LpSolution(value, tuple(x))


def decide_lp(m: int, n: int, w: int) -> bool:
    """Existence for the equitable graph: optimum exactly 2**m."""
    lp = build_reduced_lp(m, n, w)
    return solve_reduced_lp(lp).optimum == (1 << m)
