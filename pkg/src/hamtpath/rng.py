"""SplitMix64, the 64-bit generator of Steele, Lea and Flood (2014).

Used instead of :mod:`random` so that a campaign seed names the same
instances in any language: the whole algorithm is the few lines below.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def random(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def instance_seed(seed: int, index: int) -> int:
    """Seed of the ``index``-th instance of a campaign, independent of the others."""
    return mix64((seed + (index + 1) * GOLDEN_GAMMA) & MASK64)
