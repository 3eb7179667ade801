"""Small Gaussian elimination over Scalars (works for both backends)."""

from __future__ import annotations

from typing import Sequence

from .scalar import Scalar


def _pivot(rows, col, start):
    best, best_abs = None, None
    for r in range(start, len(rows)):
        v = rows[r][col]
        if v.is_zero():
            continue
        if v.backend.exact:
            return r
        if best is None or abs(v.value) > best_abs:
            best, best_abs = r, abs(v.value)
    return best


def rref(matrix: Sequence[Sequence[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    rows = [list(r) for r in matrix]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = _pivot(rows, c, r)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve(A: Sequence[Sequence[Scalar]], b: Sequence[Scalar]) -> list[Scalar] | None:
    """Unique solution of ``A x = b`` or None when singular/inconsistent."""
    n = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    rows, pivots = rref(aug)
    if len(pivots) < n or n in pivots:
        return None
    x = [None] * n
    for i, c in enumerate(pivots):
        x[c] = rows[i][n]
    return x  # type: ignore[return-value]


def nullspace(A: Sequence[Sequence[Scalar]]) -> list[list[Scalar]]:
    rows, pivots = rref(A)
    n = len(A[0])
    zero = A[0][0] * 0
    one = zero + 1
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        v = [zero] * n
        v[free] = one
        for i, c in enumerate(pivots):
            v[c] = -rows[i][free]
        basis.append(v)
    return basis
