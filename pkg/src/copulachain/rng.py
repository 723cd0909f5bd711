"""Deterministic stream seeding on top of numpy's Philox generator.

Philox is counter based, so a 64-bit key fully determines the stream and
results do not depend on how work is split across replications.
"""

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """Avalanche a 64-bit integer (splitmix64 finalizer)."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return (z ^ (z >> 31)) & _MASK


def derive_seed(master: int, *ids: int) -> int:
    """Derive a stream seed from a master seed and integer identifiers.

    Each identifier is folded in through an avalanche round, so seeds for
    different (replication, purpose) pairs share no structure.
    """
    s = mix64(master)
    for k in ids:
        s = mix64((s ^ (k & _MASK)) + _GOLDEN)
    return s


def make_generator(seed: int) -> np.random.Generator:
    """Philox generator keyed by a 64-bit seed."""
    return np.random.Generator(np.random.Philox(key=seed & _MASK))
