"""Exact rational simplex for small inequality-form programs.

Solves max c.x subject to A x <= b, x >= 0 with b >= 0, entirely in
Fraction arithmetic.  The all-slack basis is feasible, so no phase one is
needed, and Bland's smallest-index rule excludes cycling.  Intended for
the symmetry-reduced programs here (tens of rows, a few hundred columns),
where exactness matters more than speed: the downstream decision compares
the optimum against a power of two with no tolerance.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


def maximize(c, A, b) -> tuple[Fraction, list[Fraction]]:
    """Return (optimal value, optimal x)."""
    n_rows = len(A)
    n_cols = len(c)
    if any(len(row) != n_cols for row in A) or len(b) != n_rows:
        raise DomainError("inconsistent program dimensions")
    if any(v < 0 for v in b):
        raise DomainError("right-hand side must be nonnegative")

    # Tableau: rows 0..n_rows-1 hold [A | I | b]; the last row holds the
    # negated objective.  Basis starts as the slack columns.
    width = n_cols + n_rows + 1
    tab = []
    for i in range(n_rows):
        row = [Fraction(v) for v in A[i]]
        row += [Fraction(1) if j == i else Fraction(0) for j in range(n_rows)]
        row.append(Fraction(b[i]))
        tab.append(row)
    obj = [Fraction(-v) for v in c] + [Fraction(0)] * (n_rows + 1)
    basis = list(range(n_cols, n_cols + n_rows))

    while True:
        enter = -1
        for j in range(width - 1):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(n_rows):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave < 0:
            raise DomainError("program is unbounded")
        pivot = tab[leave][enter]
        tab[leave] = [v / pivot for v in tab[leave]]
        prow = tab[leave]
        for i in range(n_rows):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [v - f * p for v, p in zip(tab[i], prow)]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [v - f * p for v, p in zip(obj, prow)]
        basis[leave] = enter

    x = [Fraction(0)] * n_cols
    for i, j in enumerate(basis):
        if j < n_cols:
            x[j] = tab[i][-1]
    return obj[-1], x
