"""Counter-based SplitMix64, the generator behind every seeded draw.

The k-th output (k = 0, 1, 2, ...) for a 64-bit ``seed`` is::

    z = seed + (k + 1) * 0x9E3779B97F4A7C15          (mod 2**64)
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9         (mod 2**64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB         (mod 2**64)
    out = z ^ (z >> 31)

This is exactly the sequence of Vigna's reference ``splitmix64.c`` started
from state ``seed``.  Because each output depends only on ``(seed, k)``, large
batches are computed with vectorized numpy arithmetic and the results do not
depend on platform, numpy version, or batch boundaries.
"""
from __future__ import annotations

import numpy as np

GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_MASK = (1 << 64) - 1


def mix64(z: int) -> int:
    """Scalar SplitMix64 finalizer."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


def splitmix64_scalar(seed: int, k: int) -> int:
    return mix64(seed + (k + 1) * GOLDEN_GAMMA)


def splitmix64(seed: int, counters) -> np.ndarray:
    """Outputs for an array of counters, as ``uint64``."""
    k = np.asarray(counters, dtype=np.uint64)
    z = np.uint64(seed & _MASK) + (k + np.uint64(1)) * np.uint64(GOLDEN_GAMMA)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


def uniform(seed: int, counters) -> np.ndarray:
    """Doubles in ``[0, 1)`` from the top 53 bits of each output."""
    return (splitmix64(seed, counters) >> np.uint64(11)).astype(np.float64) * (1.0 / (1 << 53))


def uniform_int(seed: int, counters, low: int, high: int) -> np.ndarray:
    """Integers uniform on ``{low, ..., high}`` (inclusive), as ``int64``."""
    span = high - low + 1
    # Rounding in the product can land exactly on span; clamp it back.
    idx = np.minimum(np.floor(uniform(seed, counters) * span), span - 1)
    return low + idx.astype(np.int64)


def derive_seed(*parts: int) -> int:
    """Fold integers into one well-mixed 64-bit seed, order-sensitively."""
    h = 0
    for part in parts:
        h = mix64(h ^ (mix64(part & _MASK) + GOLDEN_GAMMA))
    return h
