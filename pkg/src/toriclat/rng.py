"""A tiny splittable PRNG (splitmix64) for reproducible simulations.

Trial i of a simulation draws from stream(seed, i), so aggregate results
are bit-identical whether trials run serially, chunked, or across any
number of workers.  The compiled kernels implement the same generator in
C; the two must agree value for value.
"""

from __future__ import annotations

M64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """The splitmix64 finalizer, a 64-bit bijection."""
    z &= M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M64
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("_state",)

    def __init__(self, state: int) -> None:
        self._state = state & M64

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN) & M64
        return mix64(self._state)

    def below(self, n: int) -> int:
        """Unbiased draw from range(n) by rejecting the low remainder zone."""
        if n <= 0:
            raise ValueError("n must be positive")
        threshold = (1 << 64) % n
        while True:
            v = self.next_u64()
            if v >= threshold:
                return v % n


def stream(seed: int, index: int) -> SplitMix64:
    """The independent generator for one trial of a seeded run."""
    return SplitMix64(mix64((seed & M64) ^ mix64(index)))
