"""Counter-based deterministic RNG shared by the stochastic stages.

The generator is a splitmix64 stream: a 64-bit state advanced by the
golden-ratio increment, each output passed through the splitmix
finalizer. Streams are keyed by (seed, label integers...), so any
(epoch, edge) pair can be replayed independently of execution order.
The same arithmetic is mirrored bit-for-bit in the compiled kernels.

Sub-seeds for pipeline stages are derived from the global seed by
hashing a stage label with blake2b; the derivation is part of the
file-format contract and must stay stable.
"""

import hashlib

MASK64 = 0xFFFFFFFFFFFFFFFF
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """splitmix64 finalizer: bijective avalanche mix of a 64-bit word."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def stream_key(seed: int, *labels: int) -> int:
    """Fold integer labels into a stream key. Order-sensitive."""
    h = mix64(seed & MASK64)
    for v in labels:
        h = mix64((h + GOLDEN + (v & MASK64)) & MASK64)
    return h


class SplitMix:
    """Sequential draws from one keyed stream."""

    __slots__ = ("state",)

    def __init__(self, key: int):
        self.state = key & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def uniform(self) -> float:
        # 53 mantissa bits -> [0, 1)
        return (self.next_u64() >> 11) * (1.0 / 9007199254740992.0)

    def randint(self, n: int) -> int:
        return self.next_u64() % n


def derive_seed(global_seed: int, label: str) -> int:
    """Stable labeled sub-seed: blake2b('<seed>:<label>') -> u64."""
    digest = hashlib.blake2b(f"{global_seed}:{label}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")
