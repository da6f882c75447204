"""Deterministic pseudo-randomness for the verification suites.

SplitMix64 with the standard update constants, so that identical seeds
reproduce identical test cases in any implementation:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

All arithmetic is modulo 2^64.
"""

from __future__ import annotations

MASK = (1 << 64) - 1

__all__ = ["SplitMix64"]


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed=0):
        self.state = seed & MASK

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return (z ^ (z >> 31)) & MASK

    def below(self, bound):
        """Uniform integer in [0, bound); bound 0 or less returns 0."""
        if bound <= 0:
            return 0
        return self.next_u64() % bound

    def choice(self, seq):
        return seq[self.below(len(seq))]
