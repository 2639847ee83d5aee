# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: exact convolution and the independent-set subset sweep.

Same contract as indseqlab._kernels_py; keep both in lockstep.  Coefficient
arithmetic stays on Python ints (exact, arbitrary precision); the win here
is removing interpreter dispatch from the inner loops.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_ctz(unsigned int) nogil
    int __builtin_popcount(unsigned int) nogil

DEFAULT_THRESHOLD = 32

ORACLE_MAX_VERTICES = 22


cpdef list convolve(list a, list b, Py_ssize_t threshold=32):
    """Exact product of two coefficient lists over Python ints.

    Schoolbook below `threshold` coefficients, Karatsuba above; the
    threshold changes speed only, never the result.
    """
    if threshold < 1:
        threshold = 1
    return _conv(a, b, threshold)


cdef list _schoolbook(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef list out = [0] * (na + nb - 1)
    cdef object ai
    for i in range(na):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(nb):
            out[i + j] = out[i + j] + ai * b[j]
    return out


cdef list _vadd(list u, list v):
    # elementwise sum; the shorter list is implicitly zero-padded
    cdef Py_ssize_t nu = len(u), nv = len(v), i
    cdef list out
    if nu < nv:
        u, v = v, u
        nu, nv = nv, nu
    out = list(u)
    for i in range(nv):
        out[i] = out[i] + v[i]
    return out


cdef list _conv(list a, list b, Py_ssize_t threshold):
    cdef Py_ssize_t na = len(a), nb = len(b), h, i
    cdef list a0, a1, b0, b1, z0, z1, z2, out
    cdef object c
    if na == 0 or nb == 0:
        return []
    if (na if na < nb else nb) <= threshold:
        return _schoolbook(a, b)
    # split both operands at h: p = p0 + x^h p1, then
    # p*q = z0 + x^h (z1 - z0 - z2) + x^{2h} z2 with z1 = (p0+p1)(q0+q1)
    h = (na if na > nb else nb) >> 1
    a0 = a[:h]
    a1 = a[h:]
    b0 = b[:h]
    b1 = b[h:]
    z0 = _conv(a0, b0, threshold)
    z2 = _conv(a1, b1, threshold)
    z1 = _conv(_vadd(a0, a1), _vadd(b0, b1), threshold)
    out = [0] * (na + nb - 1)
    for i in range(len(z0)):
        c = z0[i]
        out[i] = out[i] + c
        out[i + h] = out[i + h] - c
    for i in range(len(z1)):
        out[i + h] = out[i + h] + z1[i]
    for i in range(len(z2)):
        c = z2[i]
        out[i + h] = out[i + h] - c
        out[i + 2 * h] = out[i + 2 * h] + c
    return out


cpdef list independent_set_counts(list neighbor_masks):
    """Count independent sets by size via a sweep over all vertex subsets.

    neighbor_masks[v] is the bitmask of vertices adjacent to v.  Returns
    counts[k] = number of independent k-subsets, for k = 0..n.  A subset
    is tested through its lowest vertex: it is independent iff the rest
    is independent and the lowest vertex has no neighbor in the rest.
    Budget-limited to n <= 22 (a 4M-subset sweep).
    """
    cdef int n = <int> len(neighbor_masks)
    if n > 22:
        raise ValueError("subset sweep limited to n <= 22, got n=%d" % n)
    cdef list result = [0] * (n + 1)
    result[0] = 1
    if n == 0:
        return result
    cdef unsigned int adj[22]
    cdef unsigned long long counts[23]
    cdef int v
    for v in range(n + 1):
        counts[v] = 0
    counts[0] = 1
    for v in range(n):
        adj[v] = <unsigned int> neighbor_masks[v]
    cdef unsigned char * ok = <unsigned char *> malloc((<size_t> 1) << n)
    if ok == NULL:
        raise MemoryError()
    cdef unsigned int mask, rest
    cdef unsigned int top = (<unsigned int> 1) << n
    ok[0] = 1
    try:
        with nogil:
            for mask in range(1, top):
                v = __builtin_ctz(mask)
                rest = mask & (mask - 1)
                if ok[rest] != 0 and (adj[v] & rest) == 0:
                    ok[mask] = 1
                    counts[__builtin_popcount(mask)] += 1
                else:
                    ok[mask] = 0
    finally:
        free(ok)
    for v in range(n + 1):
        result[v] = counts[v]
    return result
