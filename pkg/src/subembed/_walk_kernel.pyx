# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled walk-end kernel; see _walk_np for the reference semantics."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def walk_ends(const long long[::1] indptr, const long long[::1] indices,
              const long long[::1] starts, const long long[::1] lengths,
              const double[:, ::1] steps):
    cdef Py_ssize_t nwalk = starts.shape[0]
    out = np.empty(nwalk, dtype=np.int64)
    cdef long long[::1] out_v = out
    cdef Py_ssize_t i
    cdef long long x, lo, deg, j, t
    with nogil:
        for i in range(nwalk):
            x = starts[i]
            for t in range(lengths[i]):
                lo = indptr[x]
                deg = indptr[x + 1] - lo
                j = <long long>(steps[t, i] * deg)
                if j >= deg:
                    j = deg - 1
                x = indices[lo + j]
            out_v[i] = x
    return out
