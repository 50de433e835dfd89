"""Deterministic splittable PRNG used for every random choice in the package.

The generator is counter-based on top of the splitmix64 finalizer: a stream
is identified by a 64-bit key, and the k-th output word is
``mix64(key + k * GAMMA)``.  Keys are derived by folding an integer path
(seed, tag, indices, ...) through the same mixer, so independent streams can
be split off deterministically at any point.  Gaussians come from Box-Muller
on 53-bit uniforms.  Everything is plain integer arithmetic, so a fixed
(seed, path) pair yields bit-identical output on any platform.
"""
from __future__ import annotations

import math
import struct

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_KEY_DOMAIN = 0x8AC7230489E80000  # arbitrary non-zero domain constant

# Stream tags, so different consumers of the same seed never collide.
TAG_GEN_RANDOM = 1
TAG_GEN_PLANTED = 2
TAG_SOLVER = 3
TAG_SUBSET = 4
TAG_ROTATION = 5


def mix64(z: int) -> int:
    """splitmix64 finalizer: a 64-bit bijective mixer."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def derive_key(seed: int, *path: int) -> int:
    """Fold (seed, *path) into a 64-bit stream key."""
    h = mix64((seed & _MASK) ^ _KEY_DOMAIN)
    for t in path:
        h = mix64(h ^ mix64(t & _MASK))
    return h


def float_bits(x: float) -> int:
    """IEEE-754 bit pattern of a double, as an unsigned 64-bit int."""
    return struct.unpack("<Q", struct.pack("<d", x))[0]


class Stream:
    """Counter-based word stream for a fixed key."""

    def __init__(self, key: int):
        self.key = key & _MASK
        self.counter = 0

    def next_u64(self) -> int:
        self.counter += 1
        return mix64((self.key + self.counter * _GAMMA) & _MASK)

    def uniform(self) -> float:
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def uniform_open(self) -> float:
        """Uniform double in (0, 1], safe as a log argument."""
        return ((self.next_u64() >> 11) + 1) * 2.0**-53

    def normal(self) -> float:
        """Standard normal via Box-Muller (pairs cached)."""
        spare = getattr(self, "_spare", None)
        if spare is not None:
            self._spare = None
            return spare
        u1 = self.uniform_open()
        u2 = self.uniform()
        r = math.sqrt(-2.0 * math.log(u1))
        theta = 2.0 * math.pi * u2
        self._spare = r * math.sin(theta)
        return r * math.cos(theta)

    def normals(self, n: int) -> list[float]:
        return [self.normal() for _ in range(n)]
