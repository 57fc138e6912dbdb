"""Fraction-free exact linear algebra over the integers and rationals.

Everything here works on plain lists of Python ints or ``Fraction`` objects,
so there is no overflow and no rounding.  The elimination kernel is Bareiss'
one-step fraction-free scheme: every intermediate entry is a minor of the
input, and every division is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Matrix = list[list[int]]


def _clear_denominators(rows: Sequence[Sequence[int | Fraction]]) -> Matrix:
    """Scale each row by the lcm of its denominators (row space unchanged)."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def bareiss_echelon(rows: Sequence[Sequence[int | Fraction]]) -> tuple[Matrix, list[int]]:
    """Fraction-free row echelon form.

    Returns the echelon matrix (integer entries) and the list of pivot
    columns.  Rational input rows are first scaled to integers.
    """
    m = _clear_denominators(rows)
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, ncols):
                # exact by Sylvester's identity
                row_i[j] = (piv * row_i[j] - mic * row_r[j]) // prev
            row_i[c] = 0
        # rows above r keep their old scale; only rows below were updated
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots


def rank(rows: Sequence[Sequence[int | Fraction]]) -> int:
    """Exact rank of an integer or rational matrix."""
    if not rows or not rows[0]:
        return 0
    return len(bareiss_echelon(rows)[1])


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in rows]
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if p is None:
                return 0
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def solve(a: Sequence[Sequence[int | Fraction]], b: Sequence[int | Fraction]) -> list[Fraction]:
    """Solve the square nonsingular system ``a x = b`` exactly.

    Forward elimination is fraction-free on the augmented matrix; only the
    back substitution produces rationals.
    """
    n = len(a)
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    ech, pivots = bareiss_echelon(aug)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(ech[i][n]) - sum(ech[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / ech[i][i]
    return x


def nullspace(rows: Sequence[Sequence[int | Fraction]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel ``{x : rows x = 0}`` over the rationals."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ech, pivots = bareiss_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            s = sum(ech[i][j] * x[j] for j in range(c + 1, ncols))
            x[c] = -Fraction(s) / ech[i][c]
        basis.append(x)
    return basis


def primitive(vec: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g == 0:
        return tuple(vec)
    return tuple(x // g for x in vec)


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]
