# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled refinement kernels; same contract as ``_kernels_py``."""

import numpy as np

cdef enum:
    MAXM = 64


cdef bint _refines(const int* fine, const int* coarse, int m) nogil:
    cdef int image[MAXM]
    cdef int pf = 0, pc = 0, e, k, a, b, steps = 0
    for e in range(m):
        if fine[e] + 1 > pf:
            pf = fine[e] + 1
        if coarse[e] + 1 > pc:
            pc = coarse[e] + 1
    for k in range(pf):
        image[k] = -1
    for e in range(m):
        b = fine[e]
        if image[b] < 0:
            image[b] = coarse[e]
        elif image[b] != coarse[e]:
            return False
    for k in range(pf):
        a = image[k]
        b = image[(k + 1) % pf]
        if a != b:
            if b != (a + 1) % pc:
                return False
            steps += 1
    return steps == pc or (pc == 1 and steps == 0)


def refines_pair(fine, coarse):
    cdef int m = len(fine)
    cdef int f[MAXM]
    cdef int c[MAXM]
    cdef int e
    if len(coarse) != m:
        raise ValueError("block codes of different length")
    if m > MAXM:
        raise ValueError(f"ground set larger than {MAXM}")
    for e in range(m):
        f[e] = fine[e]
        c[e] = coarse[e]
    return bool(_refines(f, c, m))


def refines_many(fines, coarse):
    cdef const int[:, ::1] fv = np.ascontiguousarray(fines, dtype=np.intc)
    cdef const int[::1] cv = np.ascontiguousarray(coarse, dtype=np.intc)
    cdef Py_ssize_t n = fv.shape[0], i
    cdef int m = fv.shape[1]
    if cv.shape[0] != m:
        raise ValueError("block codes of different length")
    if m > MAXM:
        raise ValueError(f"ground set larger than {MAXM}")
    out = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] ov = out
    with nogil:
        for i in range(n):
            ov[i] = _refines(&fv[i, 0], &cv[0], m)
    return out


def refinement_matrix(fines, coarses):
    cdef const int[:, ::1] fv = np.ascontiguousarray(fines, dtype=np.intc)
    cdef const int[:, ::1] cv = np.ascontiguousarray(coarses, dtype=np.intc)
    cdef Py_ssize_t nf = fv.shape[0], nc = cv.shape[0], i, j
    cdef int m = fv.shape[1]
    if nc and cv.shape[1] != m:
        raise ValueError("block codes of different length")
    if m > MAXM:
        raise ValueError(f"ground set larger than {MAXM}")
    out = np.zeros((nf, nc), dtype=np.uint8)
    cdef unsigned char[:, ::1] ov = out
    with nogil:
        for i in range(nf):
            for j in range(nc):
                ov[i, j] = _refines(&fv[i, 0], &cv[j, 0], m)
    return out
