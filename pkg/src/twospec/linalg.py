"""Dense linear algebra over generic scalars (Fraction, float, complex).

One implementation per routine serves both arithmetic modes: pivoting is by
magnitude, which is a legal (if unnecessary) choice in exact arithmetic and
the right one in binary64.  Matrices here never exceed desk scale.
"""

from __future__ import annotations

import math

__all__ = [
    "mat_vec",
    "rref_nullspace",
    "det_lu",
    "det_bareiss",
    "unitarity_defect",
]


def mat_vec(rows, v):
    return tuple(sum(r[j] * v[j] for j in range(len(v))) for r in rows)


def rref_nullspace(rows, ncols, tol=0.0):
    """Nullspace basis by row reduction with magnitude partial pivoting.

    ``tol`` is a relative threshold below which a pivot candidate counts as
    zero; ``tol == 0`` means exact comparison (rational mode).  Returns a list
    of length-``ncols`` tuples, one per free column.
    """
    work = [list(r) for r in rows]
    nrows = len(work)
    scale = max((abs(e) for r in work for e in r), default=0)
    thresh = tol * scale if tol else 0

    pivot_cols = []
    piv_r = 0
    for col in range(ncols):
        if piv_r >= nrows:
            break
        best, best_row = None, None
        for i in range(piv_r, nrows):
            a = abs(work[i][col])
            if best is None or a > best:
                best, best_row = a, i
        if best is None or best <= thresh or (not tol and work[best_row][col] == 0):
            continue
        work[piv_r], work[best_row] = work[best_row], work[piv_r]
        piv = work[piv_r][col]
        work[piv_r] = [e / piv for e in work[piv_r]]
        for i in range(nrows):
            if i == piv_r:
                continue
            f = work[i][col]
            if f == 0:
                continue
            work[i] = [e - f * p for e, p in zip(work[i], work[piv_r])]
        pivot_cols.append(col)
        piv_r += 1

    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        vec = [0] * ncols
        vec[f] = 1
        for i, pc in enumerate(pivot_cols):
            vec[pc] = -work[i][f]
        basis.append(tuple(vec))
    return basis


def det_lu(rows):
    """Determinant by LU with partial pivoting.

    Returns ``(det, pivots)`` with the pivot magnitudes in elimination
    order; callers inspect them to flag ill-conditioned evaluations.  An
    exactly singular matrix yields a zero determinant and a 0.0 pivot.
    """
    n = len(rows)
    if n == 0:
        return 1, ()
    a = [list(r) for r in rows]
    det = 1
    pivots = []
    for k in range(n):
        best, best_row = -1.0, k
        for i in range(k, n):
            m = abs(a[i][k])
            if m > best:
                best, best_row = m, i
        if best == 0:
            pivots.append(0.0)
            return a[0][0] * 0, tuple(pivots)
        if best_row != k:
            a[k], a[best_row] = a[best_row], a[k]
            det = -det
        piv = a[k][k]
        det = det * piv
        pivots.append(abs(piv))
        for i in range(k + 1, n):
            f = a[i][k] / piv
            if f == 0:
                continue
            for j in range(k + 1, n):
                a[i][j] -= f * a[k][j]
    return det, tuple(pivots)


def det_bareiss(rows):
    """Determinant by fraction-free (Bareiss) elimination; exact over
    integers and rationals."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return a[0][0] * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev
            a[i][k] = a[k][k] * 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def unitarity_defect(rows):
    """Frobenius norm of C C* - I."""
    n = len(rows)
    acc = 0.0
    for i in range(n):
        for j in range(n):
            s = sum(rows[i][k] * rows[j][k].conjugate() for k in range(n))
            if i == j:
                s = s - 1
            acc += abs(s) ** 2
    return math.sqrt(acc)
