# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled Levenshtein kernel; dispatching lives in devaime.editdist."""

from libc.stdlib cimport free, malloc


def edit_distance(str a, str b):
    """Unit-cost Levenshtein distance between two strings."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    cdef Py_ssize_t* prev = <Py_ssize_t*> malloc((lb + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* cur = <Py_ssize_t*> malloc((lb + 1) * sizeof(Py_ssize_t))
    if prev == NULL or cur == NULL:
        if prev != NULL:
            free(prev)
        if cur != NULL:
            free(cur)
        raise MemoryError()
    cdef Py_ssize_t i, j, best, cand
    cdef Py_UCS4 ca
    cdef Py_ssize_t* tmp
    cdef Py_ssize_t result
    try:
        for j in range(lb + 1):
            prev[j] = j
        for i in range(la):
            ca = a[i]
            cur[0] = i + 1
            for j in range(1, lb + 1):
                best = prev[j - 1]
                if b[j - 1] != ca:
                    best += 1
                cand = prev[j] + 1
                if cand < best:
                    best = cand
                cand = cur[j - 1] + 1
                if cand < best:
                    best = cand
                cur[j] = best
            tmp = prev
            prev = cur
            cur = tmp
        result = prev[lb]
    finally:
        free(prev)
        free(cur)
    return result
