"""Deterministic random streams.

Every random decision is drawn from a generator derived from the global
seed and a stable key (usually a sample id), never from shared state, so
results do not depend on processing order.
"""

import hashlib

import numpy as np


def stable_hash(key: str) -> int:
    """64-bit integer digest of a string, stable across processes."""
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def sample_rng(seed: int, key: str) -> np.random.Generator:
    """Generator for one (seed, key) pair."""
    return np.random.default_rng([int(seed), stable_hash(key)])
