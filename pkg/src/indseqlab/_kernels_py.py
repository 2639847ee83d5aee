"""Pure-Python kernels: exact convolution and the independent-set subset sweep.

``indseqlab._kernels_c`` is a compiled (Cython) module with the same two
entry points; ``indseqlab._backend`` picks whichever imports.  Keep this
file and the .pyx in lockstep -- the test suite runs them against each
other on random inputs.
"""

DEFAULT_THRESHOLD = 32

ORACLE_MAX_VERTICES = 22


def convolve(a, b, threshold=DEFAULT_THRESHOLD):
    """Exact product of two coefficient lists over Python ints.

    Schoolbook multiplication below `threshold` coefficients, Karatsuba
    above it.  The threshold is a tuning knob only; results are identical
    for any value.  An empty operand yields the empty list.  The result
    has len(a)+len(b)-1 entries and is not canonicalized here.
    """
    if threshold < 1:
        threshold = 1
    return _conv(a, b, threshold)


def _schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _vadd(u, v):
    # elementwise sum; the shorter list is implicitly zero-padded
    if len(u) < len(v):
        u, v = v, u
    out = list(u)
    for i, c in enumerate(v):
        out[i] += c
    return out


def _conv(a, b, threshold):
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return []
    if min(na, nb) <= threshold:
        return _schoolbook(a, b)
    # split both operands at h: p = p0 + x^h p1, then
    # p*q = z0 + x^h (z1 - z0 - z2) + x^{2h} z2 with z1 = (p0+p1)(q0+q1)
    h = max(na, nb) >> 1
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _conv(a0, b0, threshold)
    z2 = _conv(a1, b1, threshold)
    z1 = _conv(_vadd(a0, a1), _vadd(b0, b1), threshold)
    out = [0] * (na + nb - 1)
    for i, c in enumerate(z0):
        out[i] += c
        out[i + h] -= c
    for i, c in enumerate(z1):
        out[i + h] += c
    for i, c in enumerate(z2):
        out[i + h] -= c
        out[i + 2 * h] += c
    return out


def independent_set_counts(neighbor_masks):
    """Count independent sets by size via a sweep over all vertex subsets.

    neighbor_masks[v] is the bitmask of vertices adjacent to v.  Returns
    counts[k] = number of independent k-subsets, for k = 0..n.  A subset
    is tested through its lowest vertex: it is independent iff the rest
    is independent and the lowest vertex has no neighbor in the rest.
    Budget-limited to n <= 22 (a 4M-subset sweep).
    """
    n = len(neighbor_masks)
    if n > ORACLE_MAX_VERTICES:
        raise ValueError(
            "subset sweep limited to n <= %d, got n=%d" % (ORACLE_MAX_VERTICES, n)
        )
    counts = [0] * (n + 1)
    counts[0] = 1
    if n == 0:
        return counts
    ok = bytearray(1 << n)
    ok[0] = 1
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask ^ low
        if ok[rest] and not (neighbor_masks[low.bit_length() - 1] & rest):
            ok[mask] = 1
            counts[mask.bit_count()] += 1
    return counts
