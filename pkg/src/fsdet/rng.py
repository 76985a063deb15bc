"""SplitMix64 generator.

Defined by its algorithm (not by numpy's bit generators) so that a seed
produces the same stream in any implementation.
"""

import math

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed):
        self.state = int(seed) & _MASK

    def next_u64(self):
        self.state = (self.state + _GOLDEN) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self, low=0.0, high=1.0):
        """Double in [low, high) built from the top 53 bits."""
        u = (self.next_u64() >> 11) * (1.0 / (1 << 53))
        return low + (high - low) * u

    def uniforms(self, n, low=0.0, high=1.0):
        return [self.uniform(low, high) for _ in range(n)]

    def exponential(self):
        # 1 - u lies in (0, 1], so the log is finite
        return -math.log(1.0 - self.uniform())
