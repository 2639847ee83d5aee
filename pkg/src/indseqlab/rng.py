"""Deterministic 64-bit random generator for replayable tree sampling.

This is splitmix64 (Steele, Lea, Flood: "Fast splittable pseudorandom
number generators"), written out in full so that sampled trees can be
regenerated bit-for-bit on any platform from (seed, index) alone.
"""

MASK64 = (1 << 64) - 1

GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """The splitmix64 output mix of a 64-bit word."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """splitmix64 stream: state advances by the golden gamma, output is mix64."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN_GAMMA) & MASK64
        return mix64(self._state)

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n), bias-free via rejection sampling."""
        if n <= 0:
            raise ValueError("randbelow needs n >= 1, got %d" % n)
        if n == 1:
            return 0
        limit = ((1 << 64) // n) * n
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n


def derive_seed(master: int, index: int) -> int:
    """Per-sample seed for sample `index` of a run keyed by `master`.

    Defined as mix64(mix64(master) XOR (index + 1) * GOLDEN_GAMMA); fixed
    forever so persisted search records stay replayable.
    """
    if index < 0:
        raise ValueError("sample index must be >= 0, got %d" % index)
    return mix64(mix64(master) ^ (((index + 1) * GOLDEN_GAMMA) & MASK64))
