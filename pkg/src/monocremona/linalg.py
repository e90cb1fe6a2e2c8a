"""Exact integer and rational linear algebra for small square matrices.

Everything runs on Python ints and fractions.Fraction, so results are exact
at any magnitude.  Matrices are plain sequences of rows; functions return
tuples of tuples.  Intended for sizes up to about 8.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import SingularMatrix

Rows = Sequence[Sequence[int]]


def _as_square(rows: Rows) -> list[list[int]]:
    m = [list(r) for r in rows]
    size = len(m)
    if size < 1:
        raise ValueError("matrix must have size >= 1")
    for r in m:
        if len(r) != size:
            raise ValueError("matrix must be square")
    return m


def _bareiss(m: list[list[int]]) -> int:
    """Fraction-free Bareiss elimination; every division below is exact."""
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def determinant(rows: Rows) -> int:
    """Exact determinant of a square integer matrix."""
    return _bareiss(_as_square(rows))


def _minor(m: list[list[int]], i: int, j: int) -> int:
    sub = [row[:j] + row[j + 1 :] for k, row in enumerate(m) if k != i]
    if not sub:
        return 1  # empty minor of a 1x1 matrix
    return _bareiss(sub)


def adjugate(rows: Rows) -> tuple[tuple[int, ...], ...]:
    """Adjugate matrix: M * adj(M) = det(M) * I, also defined for singular M."""
    m = _as_square(rows)
    n = len(m)
    return tuple(
        tuple((-1) ** (i + j) * _minor(m, j, i) for j in range(n)) for i in range(n)
    )


def rational_inverse(rows: Rows) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse adj(M)/det(M); raises SingularMatrix when det = 0."""
    m = _as_square(rows)
    det = _bareiss([row[:] for row in m])
    if det == 0:
        raise SingularMatrix("matrix has determinant zero")
    adj = adjugate(m)
    return tuple(tuple(Fraction(x, det) for x in row) for row in adj)


def identity(size: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for j in range(size)) for i in range(size))


def mat_mul(a: Rows, b: Rows) -> tuple[tuple[int, ...], ...]:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def transpose(rows: Rows) -> tuple[tuple[int, ...], ...]:
    return tuple(zip(*[tuple(r) for r in rows]))
