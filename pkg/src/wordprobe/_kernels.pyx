# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled construction kernels; same contracts as ``_pykernels``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def sa_build(const unsigned char[::1] codes):
    cdef Py_ssize_t n = codes.shape[0]
    cdef Py_ssize_t cap = 2 * n + 2
    length_arr = np.zeros(cap, dtype=np.int32)
    link_arr = np.full(cap, -1, dtype=np.int32)
    trans_arr = np.full((cap, 4), -1, dtype=np.int32)
    cdef int[::1] length = length_arr
    cdef int[::1] link = link_arr
    cdef int[:, ::1] trans = trans_arr
    cdef int size = 1, last = 0, cur, p, q, clone, k
    cdef unsigned char c
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            c = codes[i]
            cur = size
            size += 1
            length[cur] = length[last] + 1
            link[cur] = 0
            p = last
            while p != -1 and trans[p, c] == -1:
                trans[p, c] = cur
                p = link[p]
            if p != -1:
                q = trans[p, c]
                if length[p] + 1 == length[q]:
                    link[cur] = q
                else:
                    clone = size
                    size += 1
                    length[clone] = length[p] + 1
                    link[clone] = link[q]
                    for k in range(4):
                        trans[clone, k] = trans[q, k]
                    while p != -1 and trans[p, c] == q:
                        trans[p, c] = clone
                        p = link[p]
                    link[q] = clone
                    link[cur] = clone
            last = cur
    return length_arr[:size].copy(), link_arr[:size].copy(), trans_arr[:size].copy()


def eertree_build(const unsigned char[::1] codes):
    cdef Py_ssize_t n = codes.shape[0]
    cdef Py_ssize_t cap = n + 2
    length_arr = np.zeros(cap, dtype=np.int32)
    link_arr = np.zeros(cap, dtype=np.int32)
    trans_arr = np.full((cap, 4), -1, dtype=np.int32)
    end_arr = np.zeros(cap, dtype=np.int64)
    cdef int[::1] length = length_arr
    cdef int[::1] link = link_arr
    cdef int[:, ::1] trans = trans_arr
    cdef long long[::1] end = end_arr
    cdef int size = 2, last = 1, cur, p, v, nxt
    cdef Py_ssize_t i, j
    cdef unsigned char c
    length[0] = -1
    with nogil:
        for i in range(n):
            c = codes[i]
            cur = last
            while True:
                j = i - 1 - length[cur]
                if j >= 0 and codes[j] == c:
                    break
                cur = link[cur]
            nxt = trans[cur, c]
            if nxt != -1:
                last = nxt
                continue
            v = size
            size += 1
            length[v] = length[cur] + 2
            end[v] = i + 1
            if length[v] == 1:
                link[v] = 1
            else:
                p = link[cur]
                while True:
                    j = i - 1 - length[p]
                    if j >= 0 and codes[j] == c:
                        break
                    p = link[p]
                link[v] = trans[p, c]
            trans[cur, c] = v
            last = v
    return (
        length_arr[:size].copy(),
        link_arr[:size].copy(),
        trans_arr[:size].copy(),
        end_arr[:size].copy(),
    )
