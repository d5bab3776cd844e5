# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled mask hot paths: run-length coding and IoU pixel counts.

Mirrors the pure-python module ``_speedups_py``; the package picks
whichever is importable (compiled preferred).
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def encode_runs(cnp.uint8_t[:, :] data):
    """Column-major run lengths of a 0/1 mask, first run counting zeros."""
    cdef Py_ssize_t h = data.shape[0]
    cdef Py_ssize_t w = data.shape[1]
    cdef Py_ssize_t n = h * w
    if n == 0:
        return np.zeros(1, dtype=np.int64)
    # Worst case alternates every pixel: n runs plus a possible leading zero.
    out = np.empty(n + 1, dtype=np.int64)
    cdef cnp.int64_t[:] runs = out
    cdef Py_ssize_t i, j, k = 0
    cdef cnp.uint8_t cur = 0
    cdef cnp.int64_t run = 0
    cdef cnp.uint8_t v
    for j in range(w):
        for i in range(h):
            v = data[i, j]
            if v == cur:
                run += 1
            else:
                runs[k] = run
                k += 1
                cur = v
                run = 1
    runs[k] = run
    k += 1
    return out[:k].copy()


def decode_runs(counts, Py_ssize_t height, Py_ssize_t width):
    """Expand run lengths back into a (height, width) uint8 mask."""
    cdef cnp.int64_t[:] c = np.ascontiguousarray(counts, dtype=np.int64)
    out = np.empty((height, width), dtype=np.uint8, order="F")
    cdef cnp.uint8_t[::1, :] m = out
    cdef Py_ssize_t idx = 0, r, t
    cdef cnp.uint8_t v = 0
    cdef Py_ssize_t h = height
    for r in range(c.shape[0]):
        v = <cnp.uint8_t> (r % 2)
        for t in range(c[r]):
            m[idx % h, idx // h] = v
            idx += 1
    return np.ascontiguousarray(out)


def intersect_union(cnp.uint8_t[:, :] a, cnp.uint8_t[:, :] b):
    """Pixel counts of intersection and union of two same-shape 0/1 masks."""
    cdef Py_ssize_t h = a.shape[0]
    cdef Py_ssize_t w = a.shape[1]
    cdef Py_ssize_t i, j
    cdef cnp.int64_t inter = 0, union_ = 0
    cdef cnp.uint8_t x, y
    for i in range(h):
        for j in range(w):
            x = a[i, j]
            y = b[i, j]
            if x & y:
                inter += 1
            if x | y:
                union_ += 1
    return inter, union_


def count_ones(cnp.uint8_t[:, :] a):
    cdef Py_ssize_t h = a.shape[0]
    cdef Py_ssize_t w = a.shape[1]
    cdef Py_ssize_t i, j
    cdef cnp.int64_t total = 0
    for i in range(h):
        for j in range(w):
            if a[i, j]:
                total += 1
    return total
