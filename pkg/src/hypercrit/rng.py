"""Deterministic, platform-stable pseudo-randomness.

All random choices in the package (separating forms, extension moduli,
random invariant systems) flow through SplitMix64 streams so that a run is
reproducible from a single 64-bit seed, independent of Python version.
"""

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """splitmix64 generator with deterministic child-stream derivation."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        return _mix(self.state)

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n). Modulo bias is irrelevant here."""
        if n <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % n

    def randint(self, lo: int, hi: int) -> int:
        """Integer in [lo, hi] inclusive."""
        return lo + self.below(hi - lo + 1)

    def child(self, *tags) -> "SplitMix64":
        """Derive an independent stream keyed by the given tags.

        Tags may be ints or strings; the derivation is deterministic and
        order-sensitive, so (2, 'x') and ('x', 2) give different streams.
        """
        h = self.state
        for tag in tags:
            if isinstance(tag, str):
                for b in tag.encode():
                    h = _mix((h ^ b) + _GAMMA & _MASK)
            else:
                h = _mix((h ^ (int(tag) & _MASK)) + _GAMMA & _MASK)
        return SplitMix64(h)
