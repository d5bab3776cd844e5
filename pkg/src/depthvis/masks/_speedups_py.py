"""Pure-numpy implementations of the mask hot paths.

Same contract as the compiled module in ``_speedups.pyx``; selected at
import time when the extension is unavailable.
"""

import numpy as np


def encode_runs(data: np.ndarray) -> np.ndarray:
    """Column-major run lengths of a 0/1 uint8 mask, first run counting zeros."""
    flat = data.ravel(order="F")
    n = flat.size
    if n == 0:
        return np.zeros(1, dtype=np.int64)
    boundaries = np.flatnonzero(flat[1:] != flat[:-1]) + 1
    starts = np.concatenate(([0], boundaries))
    ends = np.concatenate((boundaries, [n]))
    runs = (ends - starts).astype(np.int64)
    if flat[0] == 1:
        runs = np.concatenate(([0], runs))
    return runs


def decode_runs(counts: np.ndarray, height: int, width: int) -> np.ndarray:
    """Expand run lengths back into a (height, width) uint8 mask."""
    counts = np.asarray(counts, dtype=np.int64)
    values = (np.arange(counts.size, dtype=np.int64) % 2).astype(np.uint8)
    flat = np.repeat(values, counts)
    return flat.reshape((height, width), order="F").copy()


def intersect_union(a: np.ndarray, b: np.ndarray):
    """Pixel counts of intersection and union of two same-shape 0/1 masks."""
    both = a & b
    either = a | b
    return int(both.sum()), int(either.sum())


def count_ones(a: np.ndarray) -> int:
    return int(a.sum())
