# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fraction-free elimination kernels.

Entries are Python integers (arbitrary precision); the speedup comes from
typed loop indices, direct list access and skipping the interpreter's
bytecode dispatch.  Semantics match ``_elim_py`` exactly.
"""


def bareiss_rank(rows):
    cdef list a = [list(row) for row in rows if any(row)]
    cdef Py_ssize_t m = len(a)
    if m == 0:
        return 0
    cdef Py_ssize_t n = len(a[0])
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef list row_r, row_i
    cdef object prev = 1, p, f, v
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if (<list>a[i])[c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        row_r = <list>a[r]
        p = row_r[c]
        for i in range(r + 1, m):
            row_i = <list>a[i]
            f = row_i[c]
            if f == 0:
                for j in range(c + 1, n):
                    v = row_i[j]
                    if v != 0:
                        row_i[j] = (p * v) // prev
            else:
                for j in range(c + 1, n):
                    row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r


def bareiss_rref(rows, Py_ssize_t ncols):
    cdef list a = [list(row) for row in rows if any(row)]
    cdef Py_ssize_t m = len(a)
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef list row_r, row_i
    cdef list pivots = []
    cdef object prev = 1, p, f, v
    for c in range(ncols):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if (<list>a[i])[c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        row_r = <list>a[r]
        p = row_r[c]
        for i in range(m):
            if i == r:
                continue
            row_i = <list>a[i]
            f = row_i[c]
            if f == 0:
                for j in range(ncols):
                    v = row_i[j]
                    if v != 0:
                        row_i[j] = (p * v) // prev
            else:
                for j in range(ncols):
                    row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        pivots.append(c)
        r += 1
    return a[:r], pivots, prev
