"""Pure-Python fraction-free elimination on integer matrices.

Reference implementation of the routines in ``_elim.pyx``.  Both
modules expose the same two functions and must return identical results.
"""


def bareiss_rank(rows):
    """Rank of an integer matrix given as a list of rows.

    The input is not modified.
    """
    a = [list(r) for r in rows if any(r)]
    if not a:
        return 0
    m = len(a)
    n = len(a[0])
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i][c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        row_r = a[r]
        for i in range(r + 1, m):
            row_i = a[i]
            f = row_i[c]
            if f == 0:
                for j in range(c + 1, n):
                    if row_i[j]:
                        row_i[j] = (p * row_i[j]) // prev
            else:
                for j in range(c + 1, n):
                    row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r


def bareiss_rref(rows, ncols):
    """Fraction-free Gauss-Jordan reduction.

    Returns ``(reduced, pivots, d)`` where ``reduced`` holds the nonzero
    rows of the reduced matrix, ``pivots`` their pivot columns and ``d``
    the common value of every pivot entry.  Off-pivot entries are exact
    integers; dividing the whole matrix by ``d`` gives the usual RREF.
    """
    a = [list(r) for r in rows if any(r)]
    m = len(a)
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i][c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        row_r = a[r]
        for i in range(m):
            if i == r:
                continue
            row_i = a[i]
            f = row_i[c]
            if f == 0:
                for j in range(ncols):
                    if row_i[j]:
                        row_i[j] = (p * row_i[j]) // prev
            else:
                for j in range(ncols):
                    row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        pivots.append(c)
        r += 1
    return a[:r], pivots, prev
