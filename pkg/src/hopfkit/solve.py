"""Gaussian elimination over exact fields.

Rows are sparse dicts {column: nonzero value}; elimination only ever touches
the nonzero entries of the pivot row, which keeps the block-diagonal systems
produced by convolution inverses cheap.
"""
from __future__ import annotations

from .errors import ShapeMismatch
from .fields import Field
from .linmap import LinMap, TensorShape


def rref(rows, ncols: int, field: Field):
    """Reduced row echelon form.

    ``rows`` is a list of sparse row dicts (consumed as given, not mutated).
    Returns ``(reduced_rows, pivot_cols)`` where ``reduced_rows`` contains
    only the nonzero rows, each with leading entry 1 in its pivot column and
    zeros above and below, ordered by pivot column.
    """
    work = [dict(r) for r in rows]
    pivots = []
    pivot_rows = []
    used = [False] * len(work)
    for col in range(ncols):
        pivot = None
        for r, row in enumerate(work):
            if not used[r] and row.get(col):
                pivot = r
                break
        if pivot is None:
            continue
        used[pivot] = True
        prow = work[pivot]
        inv = field.inv(prow[col])
        if inv != field.one:
            prow = {c: field.mul(inv, v) for c, v in prow.items()}
            work[pivot] = prow
        items = list(prow.items())
        for r, row in enumerate(work):
            if r == pivot:
                continue
            factor = row.get(col)
            if not factor:
                continue
            for c, v in items:
                t = field.sub(row.get(c, field.zero), field.mul(factor, v))
                if t:
                    row[c] = t
                else:
                    row.pop(c, None)
        pivots.append(col)
        pivot_rows.append(prow)
    return pivot_rows, pivots


def rank_of(m: LinMap) -> int:
    rows = _rows_of(m)
    _, pivots = rref(rows, m.dom.total, m.field)
    return len(pivots)


def invert(m: LinMap):
    """Inverse of a square map, or ``None`` if singular.

    The inverse's shapes are swapped: ``cod -> dom``.
    """
    n = m.dom.total
    if m.cod.total != n:
        raise ShapeMismatch(f"cannot invert non-square {m.dom}->{m.cod}")
    field = m.field
    rows = _rows_of(m)
    # augment with the identity in columns n..2n-1
    for i, row in enumerate(rows):
        row[n + i] = field.one
    reduced, pivots = rref(rows, n, field)
    if len(pivots) < n:
        return None
    cols = [dict() for _ in range(n)]
    for r, row in enumerate(reduced):
        # pivot of row r is column r (full rank, ordered pivots)
        for c, v in row.items():
            if c >= n:
                cols[c - n][r] = v
    return LinMap(field, m.cod, m.dom, tuple(cols))


def solve(m: LinMap, rhs_col: dict):
    """One solution x of ``m . x = rhs`` or ``None`` if inconsistent.

    ``rhs_col`` is a sparse column {row: value}; free variables are set to 0,
    so the answer is canonical for a fixed elimination order.
    """
    n = m.dom.total
    field = m.field
    rows = _rows_of(m)
    aug = n  # column index holding the right-hand side
    for i, v in rhs_col.items():
        if v:
            rows[i][aug] = v
    # include the augmented column in the elimination: an inconsistent system
    # is exactly one whose rref has a pivot there
    reduced, pivots = rref(rows, n + 1, field)
    if pivots and pivots[-1] == aug:
        return None
    x = {}
    for prow, pcol in zip(reduced, pivots):
        rhs = prow.get(aug)
        # free variables are pinned at 0, so x[pivot] = reduced rhs
        if rhs:
            x[pcol] = rhs
    return x


def _rows_of(m: LinMap):
    rows = [dict() for _ in range(m.cod.total)]
    for j, col in enumerate(m.cols):
        for i, v in col.items():
            rows[i][j] = v
    return rows


def rows_to_linmap(field, rows, dom: TensorShape, cod: TensorShape) -> LinMap:
    cols = [dict() for _ in range(dom.total)]
    for i, row in enumerate(rows):
        for j, v in row.items():
            cols[j][i] = v
    return LinMap(field, dom, cod, tuple(cols))
