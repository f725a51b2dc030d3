"""Seeded pseudo-random stream with a fixed, documented contract.

Random instances used by the verification harness must be reproducible from
their seed across Python versions and releases of this package, so we do not
rely on :mod:`random` (whose derived methods are not guaranteed stable).

Contract
--------
The generator is SplitMix64. State is a 64-bit unsigned integer initialised
to ``seed mod 2**64``. Each call to :meth:`SplitMix64.next_u64`::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    return z ^ (z >> 31)

``randint(lo, hi)`` draws uniformly from ``[lo, hi]`` by rejection sampling:
with ``span = hi - lo + 1`` and ``limit = 2**64 - (2**64 mod span)``, draw
``next_u64()`` until the value ``v < limit`` and return ``lo + v mod span``.

Trial ``t`` of a batch run with seed ``s`` uses ``trial_seed(s, t) =
s * 2**32 + t``.
"""

MASK64 = (1 << 64) - 1


def trial_seed(seed: int, index: int) -> int:
    return seed * (1 << 32) + index


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range ``[lo, hi]``."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        if span > 1 << 64:
            raise ValueError("range wider than 2**64")
        limit = (1 << 64) - ((1 << 64) % span)
        while True:
            v = self.next_u64()
            if v < limit:
                return lo + v % span

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]

    def coin(self, num: int = 1, den: int = 2) -> bool:
        """True with probability ``num / den``."""
        return self.randint(0, den - 1) < num
