"""Deterministic 64-bit pseudo-random stream (splitmix64).

All randomized parts of the library (game generation, sweep campaigns,
random deletion orders) draw from this generator so that identical seeds
produce identical results on every platform and under any worker count.

The stream advances its state by a fixed odd constant and finalizes each
new state with an xor-shift/multiply mix; everything is plain integer
arithmetic mod 2**64.
"""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """Finalizer: scrambles a 64-bit value into a well-mixed output."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return (z ^ (z >> 31)) & MASK64


class SplitMix64:
    """A splitmix64 stream seeded with a 64-bit integer."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def next_in_range(self, lo: int, hi: int) -> int:
        """Draw from [lo, hi] by modular reduction of one 64-bit output.

        The reduction is part of the documented draw rule; the residual
        modulo bias (< 2**-50 for the ranges used here) is irrelevant for
        test-case generation.
        """
        return lo + self.next_u64() % (hi - lo + 1)


def derive_seed(master: int, index: int) -> int:
    """Seed for substream `index` split off a master seed.

    Defined as the `index`-th raw output of a splitmix64 stream seeded
    with `master`, which makes any substream addressable in O(1) and lets
    parallel workers reproduce exactly what a sequential run would draw.
    """
    return mix64((master + (index + 1) * GOLDEN) & MASK64)
