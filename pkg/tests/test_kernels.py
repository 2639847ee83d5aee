"""Backend equivalence: the compiled kernels and the pure-Python fallback
must agree bit-for-bit, for every threshold."""

import random

import pytest

from indseqlab import _backend, _kernels_py

needs_compiled = pytest.mark.skipif(
    "c" not in _backend.available(), reason="compiled kernels not built"
)


def naive_convolve(a, b):
    # reference product, written independently of both backends
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i in range(len(a)):
        for j in range(len(b)):
            out[i + j] += a[i] * b[j]
    return out


def random_coeffs(rng, size, bits):
    return [rng.randint(-(1 << bits), 1 << bits) for _ in range(size)]


def test_py_convolve_matches_naive():
    rng = random.Random(2024)
    for _ in range(200):
        a = random_coeffs(rng, rng.randint(1, 70), rng.choice([4, 32, 128]))
        b = random_coeffs(rng, rng.randint(1, 70), rng.choice([4, 32, 128]))
        assert _kernels_py.convolve(a, b) == naive_convolve(a, b)


def test_py_convolve_empty_and_singleton():
    assert _kernels_py.convolve([], [1, 2]) == []
    assert _kernels_py.convolve([1, 2], []) == []
    assert _kernels_py.convolve([7], [3]) == [21]


@pytest.mark.parametrize("threshold", [1, 2, 3, 8, 32, 10**9])
def test_py_threshold_never_changes_result(threshold):
    rng = random.Random(threshold)
    for _ in range(60):
        a = random_coeffs(rng, rng.randint(1, 90), 64)
        b = random_coeffs(rng, rng.randint(1, 90), 64)
        assert _kernels_py.convolve(a, b, threshold) == naive_convolve(a, b)


@needs_compiled
def test_backends_agree_on_convolve():
    from indseqlab import _kernels_c

    rng = random.Random(99)
    for _ in range(200):
        a = random_coeffs(rng, rng.randint(1, 120), rng.choice([8, 64, 256]))
        b = random_coeffs(rng, rng.randint(1, 120), rng.choice([8, 64, 256]))
        thr = rng.choice([1, 2, 8, 32, 1000])
        assert _kernels_c.convolve(a, b, thr) == _kernels_py.convolve(a, b, thr)


def random_graph_masks(rng, n, p):
    masks = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
    return masks


def naive_independent_counts(masks):
    # per-subset pair test, no memoization at all
    n = len(masks)
    counts = [0] * (n + 1)
    for sub in range(1 << n):
        verts = [v for v in range(n) if sub >> v & 1]
        if all(not (masks[u] >> v & 1) for i, u in enumerate(verts) for v in verts[i + 1 :]):
            counts[len(verts)] += 1
    return counts


def test_py_subset_sweep_matches_naive():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(0, 11)
        masks = random_graph_masks(rng, n, rng.choice([0.1, 0.3, 0.7]))
        assert _kernels_py.independent_set_counts(masks) == naive_independent_counts(masks)


@needs_compiled
def test_backends_agree_on_subset_sweep():
    from indseqlab import _kernels_c

    rng = random.Random(6)
    for _ in range(40):
        n = rng.randint(0, 14)
        masks = random_graph_masks(rng, n, rng.random())
        assert _kernels_c.independent_set_counts(masks) == _kernels_py.independent_set_counts(masks)
    # empty graphs of each size: all subsets independent
    for n in range(0, 15):
        got = _kernels_c.independent_set_counts([0] * n)
        want = [naive_independent_counts([0] * n)[k] for k in range(n + 1)]
        assert got == want


@needs_compiled
def test_subset_sweep_budget_enforced_both_backends():
    from indseqlab import _kernels_c

    for mod in (_kernels_c, _kernels_py):
        with pytest.raises(ValueError):
            mod.independent_set_counts([0] * 23)


def test_backend_switch_roundtrip():
    start = _backend.name
    other = "py" if start == "c" else "py"
    prev = _backend.use(other)
    assert prev == start
    assert _backend.name == other
    _backend.use(start)
    assert _backend.name == start
