"""Exact dense linear algebra over the coefficient field (small systems)."""

__all__ = ["solve", "det", "nullspace"]


def _pivot(rows, col, start):
    for r in range(start, len(rows)):
        if not rows[r][col].is_zero():
            return r
    return None


def solve(matrix, rhs):
    """Solve M x = rhs exactly; returns list of Coeff or None if inconsistent.

    For underdetermined systems free variables are set to zero.
    """
    m = len(matrix)
    if m == 0:
        return [] if all(c.is_zero() for c in rhs) else None
    n = len(matrix[0])
    rows = [list(row) + [rhs[r]] for r, row in enumerate(matrix)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = _pivot(rows, c, r)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for r2 in range(m):
            if r2 != r and not rows[r2][c].is_zero():
                f = rows[r2][c]
                rows[r2] = [a - f * b for a, b in zip(rows[r2], rows[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    for r2 in range(r, m):
        if not rows[r2][n].is_zero():
            return None
    ring = rhs[0].ring if rhs else matrix[0][0].ring
    out = [ring.zero()] * n
    for idx, c in enumerate(piv_cols):
        out[c] = rows[idx][n]
    return out


def det(matrix):
    n = len(matrix)
    ring = matrix[0][0].ring
    rows = [list(r) for r in matrix]
    acc = ring.one()
    sign = 1
    for c in range(n):
        p = _pivot(rows, c, c)
        if p is None:
            return ring.zero()
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            sign = -sign
        acc = acc * rows[c][c]
        inv = rows[c][c].inverse()
        for r in range(c + 1, n):
            if not rows[r][c].is_zero():
                f = rows[r][c] * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
    return acc if sign == 1 else -acc


def nullspace(matrix):
    """Basis of the right kernel, reduced echelon convention."""
    m = len(matrix)
    if m == 0:
        return []
    n = len(matrix[0])
    ring = matrix[0][0].ring
    rows = [list(r) for r in matrix]
    piv_cols = []
    r = 0
    for c in range(n):
        p = _pivot(rows, c, r)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for r2 in range(m):
            if r2 != r and not rows[r2][c].is_zero():
                f = rows[r2][c]
                rows[r2] = [a - f * b for a, b in zip(rows[r2], rows[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in piv_cols]
    out = []
    for fc in free:
        v = [ring.zero()] * n
        v[fc] = ring.one()
        for idx, pc in enumerate(piv_cols):
            v[pc] = -rows[idx][fc]
        out.append(v)
    return out
