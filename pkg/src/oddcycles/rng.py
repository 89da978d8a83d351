"""Deterministic pseudorandom numbers for generators and experiments.

All randomized code in this package draws from SplitMix64 (Steele, Lea &
Flood's mixing function over a 64-bit counter).  The algorithm is fixed
here, independent of Python or numpy versions, so any (inputs, seed) pair
reproduces bit-identical output forever.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """SplitMix64 generator: 64-bit state, advanced by the golden gamma."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    @classmethod
    def derive(cls, seed: int, *streams: int) -> "SplitMix64":
        """Independent sub-generator for (seed, streams), e.g. per-trial seeding."""
        z = seed & _MASK64
        for s in streams:
            z = _mix((z + _GOLDEN * (s + 1)) & _MASK64)
        return cls(z)

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK64
        return _mix(self.state)

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection (unbiased)."""
        if n <= 0:
            raise ValueError("randrange bound must be positive")
        limit = _MASK64 - (_MASK64 + 1) % n
        while True:
            u = self.next_u64()
            if u <= limit:
                return u % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample_ids(self, population: int, count: int) -> list[int]:
        """`count` distinct ids from range(population), in draw order."""
        if count > population:
            raise ValueError("sample larger than population")
        pool = list(range(population))
        for i in range(count):
            j = i + self.randrange(population - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:count]
