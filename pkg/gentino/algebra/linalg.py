"""
Gaussian elimination over a ``Ring``. Pivots are inverted through the ring, so over Z/nZ a
non-unit pivot raises ``FactorSignal``.
"""
from .ring import Ring


def _find_pivot(rows, col, start, ring):
    for r in range(start, len(rows)):
        if not ring.is_zero(rows[r][col]):
            return r
    return None


def determinant(matrix, ring: Ring):
    """
    :param matrix: (list<list>) square matrix of ring elements
    :param ring: (Ring) the coefficient ring
    :return: the determinant
    """
    rows = [[ring(c) for c in row] for row in matrix]
    n = len(rows)
    det = ring.one
    for col in range(n):
        pivot = _find_pivot(rows, col, col, ring)
        if pivot is None:
            return ring.zero
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        lead = rows[col][col]
        det = det * lead
        inv = ring.inverse(lead)
        for r in range(col + 1, n):
            factor = rows[r][col] * inv
            if ring.is_zero(factor):
                continue
            rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


def row_reduce(matrix, ring: Ring):
    """
    Reduced row echelon form.

    :return: (tuple<list<list>, list<int>>) the reduced rows and the pivot columns
    """
    rows = [[ring(c) for c in row] for row in matrix]
    pivots = []
    r = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        pivot = _find_pivot(rows, col, r, ring)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = ring.inverse(rows[r][col])
        rows[r] = [c * inv for c in rows[r]]
        for i in range(len(rows)):
            if i != r and not ring.is_zero(rows[i][col]):
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve_linear(matrix, rhs, ring: Ring):
    """
    Unique solution of ``matrix * x = rhs``; the system may be overdetermined.

    :param matrix: (list<list>) m x n coefficients
    :param rhs: (list) m right-hand sides
    :param ring: (Ring) the coefficient ring
    :return: (list) the n unknowns
    """
    n = len(matrix[0])
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = row_reduce(augmented, ring)
    if n in pivots:
        raise ValueError("inconsistent linear system")
    if len(pivots) < n:
        raise ValueError("linear system has no unique solution")
    return [rows[i][n] for i in range(n)]


__all__ = ['determinant', 'row_reduce', 'solve_linear']
