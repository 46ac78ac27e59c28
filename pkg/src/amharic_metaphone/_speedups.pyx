# cython: boundscheck=False, wraparound=False
"""Compiled Levenshtein kernel.

Same contract as _distance_py.levenshtein: unit-cost edit distance over
Unicode scalars. The DP rows live in a C array so the inner loop is
free of Python objects.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


def levenshtein(str a, str b) -> int:
    if a == b:
        return 0
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    if la > lb:
        a, b = b, a
        la, lb = lb, la

    cdef Py_ssize_t *row = <Py_ssize_t *> PyMem_Malloc((la + 1) * sizeof(Py_ssize_t))
    if row == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, above, corner, cost, best
    cdef Py_UCS4 ca, cb
    try:
        for i in range(la + 1):
            row[i] = i
        for j in range(1, lb + 1):
            cb = b[j - 1]
            corner = row[0]
            row[0] = j
            for i in range(1, la + 1):
                ca = a[i - 1]
                above = row[i]
                cost = corner if ca == cb else corner + 1
                best = above + 1
                if row[i - 1] + 1 < best:
                    best = row[i - 1] + 1
                if cost < best:
                    best = cost
                row[i] = best
                corner = above
        return row[la]
    finally:
        PyMem_Free(row)
