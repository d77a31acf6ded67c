"""Keyed deterministic random streams.

Every stream is addressed by ``(seed, *key)``; streams never share state,
so work split across samples or workers reproduces exactly.
"""

import hashlib
import random


def _material(seed, parts) -> str:
    return "/".join(["hypcone", str(seed)] + [repr(p) for p in parts])


def derive_seed(seed, *parts) -> int:
    digest = hashlib.sha256(_material(seed, parts).encode()).digest()
    return int.from_bytes(digest[:8], "big")


def stream(seed, *parts) -> random.Random:
    return random.Random(_material(seed, parts))


def int_vector(rng: random.Random, n: int, bound: int) -> tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(n))
