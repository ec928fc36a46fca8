"""Exact integer matrix primitives: Bareiss elimination, determinants, adjugates.

Everything works on plain lists of lists of Python ints. No floating point
anywhere; Python integers never overflow, so all results are exact.
"""

from __future__ import annotations


def rank(matrix: list[list[int]]) -> int:
    """Rank of a rectangular integer matrix via fraction-free elimination.

    Full pivoting (row and column swaps) so zero pivots never stall the
    elimination; the Bareiss division is exact at every step.
    """
    if not matrix:
        return 0
    m = [list(row) for row in matrix]
    nrows, ncols = len(m), len(m[0])
    for row in m:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
    prev = 1
    k = 0
    while k < min(nrows, ncols):
        pi = pj = -1
        for i in range(k, nrows):
            for j in range(k, ncols):
                if m[i][j] != 0:
                    pi, pj = i, j
                    break
            if pi >= 0:
                break
        if pi < 0:
            break
        if pi != k:
            m[k], m[pi] = m[pi], m[k]
        if pj != k:
            for row in m:
                row[k], row[pj] = row[pj], row[k]
        pivot = m[k][k]
        for i in range(k + 1, nrows):
            for j in range(k + 1, ncols):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
        k += 1
    return k


def det(matrix: list[list[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss, exact)."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
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


def minor(matrix: list[list[int]], drop_row: int, drop_col: int) -> int:
    """Determinant of the submatrix with one row and one column removed."""
    sub = [
        [matrix[i][j] for j in range(len(matrix)) if j != drop_col]
        for i in range(len(matrix))
        if i != drop_row
    ]
    return det(sub)


def adjugate(matrix: list[list[int]]) -> list[list[int]]:
    """Adjugate (transposed cofactor matrix); satisfies M @ adj(M) = det(M) I."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    return [
        [(-1) ** (i + j) * minor(matrix, j, i) for j in range(n)]
        for i in range(n)
    ]


def adjugate_first_column(matrix: list[list[int]]) -> list[int]:
    """First column of the adjugate: [(-1)^i * minor(0, i)] for each i."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    return [(-1) ** i * minor(matrix, 0, i) for i in range(n)]


def matvec(matrix: list[list[int]], vec: list[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, vec)) for row in matrix]
