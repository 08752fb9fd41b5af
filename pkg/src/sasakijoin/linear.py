"""Exact linear solves over any field-like coefficient type."""

from __future__ import annotations

from .errors import SingularSystem


def solve_linear_system(matrix, rhs, context: str = ""):
    """Gaussian elimination with exact pivoting; raises on singularity.

    ``matrix`` is a list of rows, ``rhs`` a list; entries may be Fractions
    or rational functions.  The system must be square.
    """
    n = len(matrix)
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if rows[i][col]), None)
        if pivot is None:
            raise SingularSystem(
                f"singular linear system (column {col}){': ' + context if context else ''}")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = rows[col][col]
        rows[col] = [e / inv for e in rows[col]]
        for i in range(n):
            if i != col and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
    return [rows[i][n] for i in range(n)]
