"""Seed-deterministic random colorings.

The PRNG is SplitMix64 (Steele-Lea-Burton finalizer), fixed here so the
random property suites reproduce bit-for-bit on any platform or Python
version: state advances by 0x9E3779B97F4A7C15 per draw and each draw is
mixed with two xor-shift-multiply rounds.

For q = 2 the colex bit-stream convention matches the `bits` file format:
draw 64-bit words, take bits LSB-first, bit 1 means blue.  For q > 2 each
subset consumes whole words through rejection sampling (values at or above
the largest multiple of q are discarded), so colors are exactly uniform.
"""

from __future__ import annotations

from math import comb

from .coloring import OrderedColoring

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """The fixed 64-bit generator behind every seeded instance."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_word(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform draw from 0..bound-1 via rejection."""
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            w = self.next_word()
            if w < limit:
                return w % bound


def random_coloring(k: int, n: int, q: int, seed: int) -> OrderedColoring:
    """Uniform independent colors for every k-subset of [n], seed-stable."""
    rng = SplitMix64(seed)
    m = comb(n, k)
    if q == 2:
        colors = []
        word = 0
        have = 0
        for _ in range(m):
            if have == 0:
                word = rng.next_word()
                have = 64
            colors.append(1 + (word & 1))
            word >>= 1
            have -= 1
        return OrderedColoring(k, n, q, tuple(colors))
    colors = tuple(1 + rng.below(q) for _ in range(m))
    return OrderedColoring(k, n, q, colors)
