"""Exact linear algebra over the rationals.

Ranks are computed with Bareiss fraction-free elimination after clearing
denominators row by row, so every intermediate quantity is an integer.
"""

from fractions import Fraction
from math import lcm


def integer_rows(rows):
    """Scale each row of a rational matrix by the lcm of its denominators."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def rank(rows, ncols=None):
    """Rank of a matrix given as a list of rows (ints or Fractions)."""
    if not rows:
        return 0
    m = integer_rows(rows)
    nrows = len(m)
    ncols = len(m[0]) if ncols is None else ncols
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        pivot_row = m[r]
        for i in range(r + 1, nrows):
            row = m[i]
            a = row[c]
            if a:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j] - a * pivot_row[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (p * row[j]) // prev
            row[c] = 0
        prev = p
        r += 1
    return r


def rref(rows):
    """Reduced row echelon form over Fraction. Returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                a = m[i][c]
                m[i] = [x - a * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def solve_affine(a, b):
    """Solve ``a x = b`` exactly.

    Returns ``(particular, nullity)`` or ``None`` if the system is inconsistent.
    The particular solution sets all free variables to zero.
    """
    n = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = m[i][n]
    return x, n - len(pivots)


def matmul(a, b):
    """Product of two dense matrices given as row lists; exact."""
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col) if x and y) for col in cols] for row in a]
