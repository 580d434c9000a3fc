"""This module provides exact linear algebra over F_p on small integer matrices (tuples of rows)."""

from collections.abc import Sequence


def det_mod(matrix: Sequence[Sequence[int]], p: int) -> int:
    """Determinant of a square matrix modulo ``p``, by Gaussian elimination."""
    m = [[x % p for x in row] for row in matrix]
    size = len(m)
    det = 1
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col] % p
        inv = pow(m[col][col], -1, p)
        for r in range(col + 1, size):
            factor = m[r][col] * inv % p
            if factor:
                m[r] = [(x - factor * y) % p for x, y in zip(m[r], m[col])]
    return det % p


def rref_mod(matrix: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form modulo ``p``.

    Returns
    -------
    tuple[list[list[int]], list[int]]
        The nonzero rows of the RREF (leading entries 1, pivots on the lowest possible columns) and the pivot columns
    """
    m = [[x % p for x in row] for row in matrix]
    rows, cols = len(m), len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [(x - factor * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank_mod(matrix: Sequence[Sequence[int]], p: int) -> int:
    if not matrix:
        return 0
    return len(rref_mod(matrix, p)[1])


def nullspace_mod(matrix: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """A basis of the right kernel ``{v : M v = 0}`` modulo ``p``."""
    cols = len(matrix[0])
    reduced, pivots = rref_mod(matrix, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * cols
        v[f] = 1
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f] % p
        basis.append(v)
    return basis
