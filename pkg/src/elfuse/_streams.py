"""Counter-based random stream derivation for parallel replications.

Every consumer of randomness derives its own generator from an integer
root seed plus a (stream tag, index...) path, so parallel and serial
runs of the same scenario consume identical streams.  The x-sample path
deliberately excludes the second-population spec and n2, which makes the
primary-sample draws (and anything computed from them alone) invariant
across second-population variations at a fixed seed.
"""

from __future__ import annotations

import numpy as np

# Stream tags: fixed, never reordered (they are part of the output contract).
STREAM_X: int = 1
STREAM_Y: int = 2
STREAM_BOOT: int = 3
STREAM_BOOT_REDRAW: int = 4
STREAM_NULL: int = 5


def derive_rng(seed: int, *path: int) -> np.random.Generator:
    """Generator for the stream addressed by (seed, *path).

    Philox is counter-based: equal (seed, path) pairs yield bit-identical
    streams regardless of what other streams were consumed before.
    """
    ss = np.random.SeedSequence(seed, spawn_key=tuple(path))
    return np.random.Generator(np.random.Philox(ss))


def resample_indices(
    seed: int, path: tuple[int, ...], b: int, n1: int, n2: int
) -> tuple[np.ndarray, np.ndarray]:
    """Index matrices (b, n1) and (b, n2) for b paired resamples.

    One generator produces both matrices; the first matrix's bytes depend
    only on (seed, path, b, n1), so primary-sample resampling is identical
    across second-population variations.
    """
    rng = derive_rng(seed, *path)
    ix = rng.integers(0, n1, size=(b, n1))
    iy = rng.integers(0, n2, size=(b, n2))
    return ix, iy
