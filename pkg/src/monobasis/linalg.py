"""Exact Gaussian elimination over the rationals.

Matrices are lists of rows of Fractions.  Nothing here pivots for stability;
with exact arithmetic any nonzero pivot is as good as another.
"""

from __future__ import annotations

from fractions import Fraction


def row_echelon(matrix):
    """Return ``(echelon_rows, pivot_columns)`` for a copy of ``matrix``."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        prow = rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][col]
            if f:
                f /= prow[col]
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix) -> int:
    if not matrix:
        return 0
    return len(row_echelon(matrix)[1])


def is_nonsingular(matrix) -> bool:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    return rank(matrix) == n


def solve(matrix, rhs):
    """Solve ``matrix @ x = rhs`` exactly; returns None if the matrix is singular."""
    n = len(matrix)
    if len(rhs) != n or any(len(row) != n for row in matrix):
        raise ValueError("solve needs a square system with matching right-hand side")
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    rows, pivots = row_echelon(aug)
    if pivots != list(range(n)):
        return None
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        s = rows[i][n] - sum(rows[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / rows[i][i]
    return x


def matvec(matrix, x):
    return [sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in matrix]


class IncrementalSpan:
    """Span of vectors added one at a time, with an O(rank * len) membership test.

    Stored vectors are kept reduced against earlier pivots, so ``add`` is a
    single sweep.
    """

    def __init__(self):
        self._basis = []  # list of (pivot_index, vector) with vector[pivot_index] == 1

    def __len__(self):
        return len(self._basis)

    def reduce(self, vec):
        v = [Fraction(x) for x in vec]
        for p, b in self._basis:
            f = v[p]
            if f:
                v = [x - f * y for x, y in zip(v, b)]
        return v

    def add(self, vec) -> bool:
        """Add ``vec``; return True iff it was independent of what was already there."""
        v = self.reduce(vec)
        p = next((i for i, x in enumerate(v) if x), None)
        if p is None:
            return False
        inv = 1 / v[p]
        self._basis.append((p, [x * inv for x in v]))
        return True
