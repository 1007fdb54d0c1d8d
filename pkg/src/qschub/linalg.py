"""Tiny exact linear algebra helpers.

Everything here works on tuples-of-tuples (rows) over ``int`` or
``fractions.Fraction``.  Matrices are small (at most the size of a
cluster, a few dozen), so plain Gaussian elimination with exact
rationals is both fast enough and bit-reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vec = tuple
Mat = tuple


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Mat, b: Mat) -> Mat:
    cols = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def mat_vec(a: Mat, v: Sequence) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def mat_neg(a: Mat) -> Mat:
    return tuple(tuple(-x for x in row) for row in a)


def invert(a: Mat) -> Mat:
    """Exact inverse of a square integer or rational matrix."""
    n = len(a)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        inv_p = 1 / work[col][col]
        work[col] = [x * inv_p for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def solve(a: Mat, rhs: Sequence) -> Vec | None:
    """One exact solution of ``a @ x = rhs``, or ``None`` if inconsistent.

    Free variables are pinned to zero, so the result is deterministic.
    ``a`` may be rectangular (rows = equations).
    """
    m = len(a)
    n = len(a[0]) if m else 0
    work = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(a, rhs)]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, m) if work[r][col] != 0), None)
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        inv_p = 1 / work[row][col]
        work[row] = [x * inv_p for x in work[row]]
        for r in range(m):
            if r != row and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[row])]
        pivots.append((row, col))
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if work[r][n] != 0:
            return None
    sol = [Fraction(0)] * n
    for r, c in pivots:
        sol[c] = work[r][n]
    return tuple(sol)
