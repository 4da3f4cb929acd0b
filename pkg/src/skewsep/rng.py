"""Deterministic, splittable random streams.

Streams are counter-based (Philox) and keyed by (seed, sha256(parts)), so a
sweep row or an independence sample can derive its own generator from the
master seed and its index; parallel evaluation order cannot change results.
"""

from __future__ import annotations

import hashlib

import numpy as np

_MASK64 = (1 << 64) - 1


def derive_key(*parts) -> int:
    """Stable 64-bit key from arbitrary labels (ints, strings)."""
    payload = "::".join(str(p) for p in parts).encode("utf-8")
    return int.from_bytes(hashlib.sha256(payload).digest()[:8], "little")


def stream(seed: int, *parts) -> np.random.Generator:
    """Independent generator for the sub-stream named by `parts`."""
    key = np.array([int(seed) & _MASK64, derive_key(*parts)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))
