"""Exact linear algebra helpers.

Two layers: division-controlled fraction-free elimination over a polynomial
domain (entries need +, -, *, is_zero, exact_div, gcd and a complexity key),
used for the large tensor-space solves; and plain Gaussian elimination over a
fraction field, used for the small Gram matrices.
"""

from __future__ import annotations


def ff_echelon(rows):
    """Fraction-free row echelon form with per-row content stripping.

    `rows` is a list of dense lists of domain elements; it is not modified.
    Each elimination step cross-multiplies (no division) and then divides the
    row by the gcd of its entries, which keeps growth comparable to Bareiss.
    Row scaling is unconstrained, so use this for rank / kernel work only.
    Returns (echelon_rows, pivot_cols).
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    piv_cols = []
    r0 = 0
    for col in range(ncols):
        pivot = None
        best = None
        for r in range(r0, len(m)):
            e = m[r][col]
            if not e.is_zero:
                key = e.complexity()
                if best is None or key < best:
                    best = key
                    pivot = r
        if pivot is None:
            continue
        m[r0], m[pivot] = m[pivot], m[r0]
        p = m[r0][col]
        for r in range(r0 + 1, len(m)):
            a = m[r][col]
            if a.is_zero:
                continue
            row = m[r]
            m[r] = _strip_content(
                [p * row[c] - a * m[r0][c] for c in range(ncols)])
        piv_cols.append(col)
        r0 += 1
        if r0 == len(m):
            break
    return m[:r0], piv_cols


def _strip_content(row):
    g = None
    for e in row:
        if e.is_zero:
            continue
        g = e if g is None else g.gcd(e)
        if g.is_unit:
            break
    if g is None or g.is_unit:
        return row
    return [e if e.is_zero else e.exact_div(g) for e in row]


def rank_ff(rows) -> int:
    _, piv = ff_echelon(rows)
    return len(piv)


def kernel_basis(rows, ncols, to_field, field_one):
    """Right kernel of the matrix, as vectors over the fraction field.

    Elimination is fraction-free; only the back substitution runs in the
    field.  Returns (basis, rank); one basis vector per free column, in
    increasing free-column order, with free coordinate 1.
    """
    ech, piv = ff_echelon(rows)
    fech = [[to_field(e) for e in row] for row in ech]
    pivset = set(piv)
    free = [c for c in range(ncols) if c not in pivset]
    zero = field_one - field_one
    basis = []
    for f in free:
        x = {f: field_one}
        for r in range(len(piv) - 1, -1, -1):
            pc = piv[r]
            s = zero
            for c, val in x.items():
                if c > pc and not val.is_zero and not fech[r][c].is_zero:
                    s = s + fech[r][c] * val
            x[pc] = -(s / fech[r][pc])
        basis.append([x.get(c, zero) for c in range(ncols)])
    return basis, len(piv)


def field_echelon(rows):
    """Gauss-Jordan over a field; returns (reduced rows, pivot cols)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    piv = []
    r0 = 0
    for col in range(ncols):
        pivot = None
        for r in range(r0, len(m)):
            if not m[r][col].is_zero:
                pivot = r
                break
        if pivot is None:
            continue
        m[r0], m[pivot] = m[pivot], m[r0]
        p = m[r0][col]
        m[r0] = [e / p for e in m[r0]]
        for r in range(len(m)):
            if r != r0 and not m[r][col].is_zero:
                a = m[r][col]
                m[r] = [x - a * y for x, y in zip(m[r], m[r0])]
        piv.append(col)
        r0 += 1
        if r0 == len(m):
            break
    return m[:r0], piv


def field_kernel(rows, ncols, field_one):
    """Right kernel over a field; free coordinate of each vector is 1."""
    ech, piv = field_echelon(rows)
    free = [c for c in range(ncols) if c not in piv]
    zero = field_one - field_one
    basis = []
    for f in free:
        x = [zero] * ncols
        x[f] = field_one
        for r, pc in enumerate(piv):
            x[pc] = -ech[r][f]
        basis.append(x)
    return basis


def field_rank(rows) -> int:
    _, piv = field_echelon(rows)
    return len(piv)


def field_det(matrix):
    """Determinant over a field by elimination (small matrices)."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    m = [list(r) for r in matrix]
    zero = m[0][0] - m[0][0]
    det = None
    sign = 1
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if not m[r][col].is_zero:
                pivot = r
                break
        if pivot is None:
            return zero
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        p = m[col][col]
        det = p if det is None else det * p
        for r in range(col + 1, n):
            if not m[r][col].is_zero:
                f = m[r][col] / p
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    if sign < 0:
        det = -det
    return det
