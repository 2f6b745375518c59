"""Fraction-free (Bareiss) elimination over the integers."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Sequence


def echelon_bareiss(matrix: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Integer row echelon form and pivot columns.

    Entries stay integral throughout: each update is divided exactly by the
    previous pivot, which keeps intermediate growth bounded by minors of the
    input.
    """
    a = [list(row) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, rows):
            f = a[i][c]
            for j in range(c, cols):
                a[i][j] = (p * a[i][j] - f * a[r][j]) // prev
        prev = p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def integer_kernel(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """Basis of the right nullspace as primitive integer vectors."""
    if ncols is None:
        ncols = len(matrix[0])
    ech, pivots = echelon_bareiss(matrix) if matrix else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        x = [Fraction(0)] * ncols
        x[fcol] = Fraction(1)
        for row, pc in zip(reversed(ech), reversed(pivots)):
            s = sum((row[j] * x[j] for j in range(pc + 1, ncols)), Fraction(0))
            x[pc] = -s / row[pc]
        den = reduce(math.lcm, (v.denominator for v in x), 1)
        ints = [int(v * den) for v in x]
        g = reduce(math.gcd, ints, 0)
        basis.append([v // g for v in ints])
    return basis


def solve_rational(matrix: Sequence[Sequence[int]], rhs: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Solve A X = B for square nonsingular integer A; columns of B are the right-hand sides.

    Returns X as a list of solution columns.
    """
    n = len(matrix)
    k = len(rhs[0])
    aug = [list(matrix[i]) + list(rhs[i]) for i in range(n)]
    ech, pivots = echelon_bareiss(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular system")
    cols = []
    for t in range(k):
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            row = ech[i]
            s = row[n + t] - sum(row[j] * x[j] for j in range(i + 1, n))
            x[i] = Fraction(s, row[i])
        cols.append(x)
    return cols
