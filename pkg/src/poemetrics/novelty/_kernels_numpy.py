"""Pure-numpy pairwise overlap kernel (fallback when numba is off)."""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"


def pairwise_f1(ids: np.ndarray, offsets: np.ndarray,
                left: np.ndarray, right: np.ndarray) -> np.ndarray:
    out = np.zeros(left.size, dtype=np.float64)
    for k in range(left.size):
        a = ids[offsets[left[k]]:offsets[left[k] + 1]]
        b = ids[offsets[right[k]]:offsets[right[k] + 1]]
        total = a.size + b.size
        if total == 0:
            continue
        va, ca = np.unique(a, return_counts=True)
        vb, cb = np.unique(b, return_counts=True)
        _, ia, ib = np.intersect1d(va, vb, assume_unique=True, return_indices=True)
        overlap = int(np.minimum(ca[ia], cb[ib]).sum())
        out[k] = 2.0 * overlap / total
    return out
