"""Fraction-free (Bareiss) elimination over the integers."""
from __future__ import annotations

from typing import Sequence

from .errors import ConsistencyError, IntegralityError


def _exact(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError(f"Bareiss step {num}/{den} is not exact")
    return q


def echelon(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """
    Row echelon form by Bareiss elimination with row swaps.

    Returns the reduced rows and the pivot column of each nonzero row. Every
    intermediate entry is a minor of the input, so the divisions are exact.
    """
    a = [list(r) for r in rows]
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            row = a[i]
            for j in range(c + 1, ncols):
                row[j] = _exact(piv * row[j] - f * a[r][j], prev)
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots


def rank(rows: Sequence[Sequence[int]]) -> int:
    return len(echelon(rows)[1])


def solve(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[int]:
    """
    The integer solution of a square nonsingular system.

    Raises IntegralityError if the unique rational solution is not integral.
    """
    size = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = echelon(aug)
    if pivots[:size] != list(range(size)):
        raise ValueError("matrix is singular")
    x = [0] * size
    for i in reversed(range(size)):
        row = reduced[i]
        num = row[size] - sum(row[j] * x[j] for j in range(i + 1, size))
        q, r = divmod(num, row[i])
        if r:
            raise IntegralityError(f"solution component {i} is {num}/{row[i]}, not an integer")
        x[i] = q
    return x
