"""Gaussian elimination over a finite field context (integer-encoded elements)."""

from __future__ import annotations

from typing import Sequence


class SingularMatrix(ArithmeticError):
    pass


def _row_reduce(field, rows: list[list[int]], ncols: int) -> list[int]:
    """Reduce ``rows`` in place to reduced row echelon form over the first
    ``ncols`` columns.  Returns the pivot column of each leading row."""
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        s = inv(prow[c])
        if s != 1:
            prow[:] = [mul(s, v) for v in prow]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                nf = neg(f)
                row[:] = [add(a, mul(nf, b)) if b else a for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def solve(field, A: Sequence[Sequence[int]], b: Sequence[int]):
    """Solve ``A x = b``.

    Returns ``(x, null_basis)`` where ``x`` is the particular solution with
    every free variable zero and ``null_basis`` spans the kernel of ``A``
    (free variables in increasing column order), or ``None`` when the system
    is inconsistent.
    """
    ncols = len(A[0]) if A else 0
    rows = [list(r) + [v] for r, v in zip(A, b)]
    pivots = _row_reduce(field, rows, ncols)
    for row in rows[len(pivots):]:
        if row[ncols]:
            return None
    x = [0] * ncols
    for r, c in enumerate(pivots):
        x[c] = rows[r][ncols]
    free = [c for c in range(ncols) if c not in set(pivots)]
    null_basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, c in enumerate(pivots):
            v[c] = field.neg(rows[r][fc])
        null_basis.append(v)
    return x, null_basis


def rank(field, A: Sequence[Sequence[int]]) -> int:
    if not A:
        return 0
    rows = [list(r) for r in A]
    return len(_row_reduce(field, rows, len(rows[0])))


def invert(field, M: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(M)
    rows = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(M)]
    pivots = _row_reduce(field, rows, n)
    if len(pivots) != n:
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in rows]
