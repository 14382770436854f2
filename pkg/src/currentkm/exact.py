"""Small exact linear algebra over ``Fraction``.

Matrices are lists of rows. Nothing here ever touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence

Matrix = List[List[Fraction]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        target = out[i]
        for k in range(inner):
            r = row[k]
            if r == 0:
                continue
            bk = b[k]
            for j in range(cols):
                if bk[j]:
                    target[j] += r * bk[j]
    return out


def matvec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> List[Fraction]:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def is_zero_matrix(a: Sequence[Sequence[Fraction]]) -> bool:
    return all(x == 0 for row in a for x in row)


def _integer_rows(a: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    # scale each row by the lcm of its denominators; rank is unchanged
    out = []
    for row in a:
        den = 1
        for x in row:
            den = lcm(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in row])
    return out


def rank(a: Sequence[Sequence[Fraction]]) -> int:
    """Rank by fraction-free (Bareiss) elimination on an integer-scaled copy."""
    m = _integer_rows(a)
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, rows):
            mi = m[i]
            f = mi[c]
            mr = m[r]
            for j in range(c + 1, cols):
                # exact division is guaranteed by Sylvester's identity
                mi[j] = (p * mi[j] - f * mr[j]) // prev
            mi[c] = 0
        prev = p
        r += 1
        if r == rows:
            break
    return r


def det(a: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(a)
    if n == 0:
        return Fraction(1)
    m = [[Fraction(x) for x in row] for row in a]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        p = m[c][c]
        result *= p
        for i in range(c + 1, n):
            f = m[i][c] / p
            if f:
                for j in range(c, n):
                    m[i][j] -= f * m[c][j]
    return sign * result


def rref(a: Sequence[Sequence[Fraction]]):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    m = [[Fraction(x) for x in row] for row in a]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def nullspace(a: Sequence[Sequence[Fraction]], cols: int | None = None) -> List[List[Fraction]]:
    """Basis of {x : a x = 0}, one vector per free column."""
    if cols is None:
        cols = len(a[0]) if a else 0
    if not a:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    m, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, pc in zip(m, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> List[Fraction] | None:
    """One solution of a x = b, or None when inconsistent."""
    cols = len(a[0]) if a else 0
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(a, b)]
    m, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for row, pc in zip(m, pivots):
        x[pc] = row[cols]
    return x


def inverse(a: Sequence[Sequence[Fraction]]) -> Matrix:
    n = len(a)
    aug = [list(row) + ident for row, ident in zip(a, identity(n))]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in m]
