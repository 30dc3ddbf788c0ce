"""Deterministic counter-based random streams (SplitMix64).

Every randomized suite draws from streams created with ``stream(seed, case)``
so that a (seed, case index) pair reproduces the identical case in any
implementation; the exact recipe is written out in docs/determinism.md.
"""

from fractions import Fraction

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """The SplitMix64 sequence seeded with an arbitrary 64-bit state."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    @classmethod
    def stream(cls, seed: int, counter: int) -> "SplitMix64":
        """Independent stream for case `counter` of a run seeded with `seed`."""
        return cls(_mix((seed + counter * _GOLDEN) & _MASK))

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        return _mix(self._state)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi]; plain modulo, by design."""
        return lo + self.next_u64() % (hi - lo + 1)

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]

    def fraction(self, num_bound: int, den_bound: int) -> Fraction:
        """Small random rational with |num| <= num_bound, 1 <= den <= den_bound."""
        return Fraction(self.randint(-num_bound, num_bound),
                        self.randint(1, den_bound))
