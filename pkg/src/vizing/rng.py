"""Platform-independent pseudo-random streams.

Every random draw in the package goes through SplitMix64 used as a
counter-based generator. With ``GOLDEN = 0x9E3779B97F4A7C15`` and all
arithmetic modulo 2**64, the i-th output (i = 0, 1, 2, ...) of the stream
keyed by ``seed`` is::

    z = seed + (i + 1) * GOLDEN
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    out_i = z ^ (z >> 31)

This is exactly the sequential SplitMix64 recurrence (``state += GOLDEN``
followed by the mix), so outputs can be produced one at a time or as a
vectorised block with numpy and agree bit for bit.

Floats are ``(out >> 11) * 2**-53`` (uniform on [0, 1)). Bounded integers use
rejection sampling on the full 64-bit word, so they are exactly uniform.

Independent substreams are keyed with :func:`derive`::

    derive(seed, key) = mix(mix(seed) ^ (key * 0xD1B54A32D192ED03 mod 2**64))

where ``mix`` is the three-line finaliser above applied to its argument.
"""

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_M1 = 0xBF58476D1CE4E5B9
_M2 = 0x94D049BB133111EB
_KEY_MULT = 0xD1B54A32D192ED03


def mix64(z):
    z &= MASK64
    z = ((z ^ (z >> 30)) * _M1) & MASK64
    z = ((z ^ (z >> 27)) * _M2) & MASK64
    return z ^ (z >> 31)


def derive(seed, *keys):
    """Key a child stream from ``seed`` and a path of non-negative integers."""
    s = seed & MASK64
    for k in keys:
        s = mix64(mix64(s) ^ ((k * _KEY_MULT) & MASK64))
    return s


class SplitMix64:
    """Sequential view of a SplitMix64 stream.

    >>> r = SplitMix64(0)
    >>> hex(r.next_u64())
    '0xe220a8397b1dcdaf'
    """

    def __init__(self, seed):
        self.seed = seed & MASK64
        self.position = 0

    def next_u64(self):
        self.position += 1
        return mix64(self.seed + self.position * GOLDEN)

    def random(self):
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randbelow(self, m):
        if m <= 0:
            raise ValueError("randbelow needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % m

    def randint(self, lo, hi):
        """Uniform integer in the closed interval [lo, hi]."""
        return lo + self.randbelow(hi - lo + 1)

    def sample(self, n, t):
        """Uniform t-subset of range(n), as a sorted list (partial Fisher-Yates)."""
        if not 0 <= t <= n:
            raise ValueError(f"cannot sample {t} of {n}")
        pool = list(range(n))
        for i in range(t):
            j = i + self.randbelow(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return sorted(pool[:t])

    def u64_block(self, count):
        """Next ``count`` outputs as a uint64 array (advances the stream)."""
        idx = np.arange(self.position + 1, self.position + 1 + count, dtype=np.uint64)
        self.position += count
        z = np.uint64(self.seed) + idx * np.uint64(GOLDEN)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_M1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_M2)
        return z ^ (z >> np.uint64(31))

    def random_block(self, count):
        return (self.u64_block(count) >> np.uint64(11)).astype(np.float64) * (1.0 / (1 << 53))
