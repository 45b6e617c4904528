"""Numba-compiled pairwise overlap kernel (default hot path)."""

from __future__ import annotations

import numpy as np
from numba import njit, prange

BACKEND = "numba"


@njit(cache=True)
def _sorted_overlap(a: np.ndarray, b: np.ndarray) -> int:
    # Multiset intersection size of two ascending id arrays, by merge walk.
    i = 0
    j = 0
    overlap = 0
    while i < a.size and j < b.size:
        if a[i] == b[j]:
            overlap += 1
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return overlap


@njit(parallel=True, cache=True)
def pairwise_f1(ids: np.ndarray, offsets: np.ndarray,
                left: np.ndarray, right: np.ndarray) -> np.ndarray:
    out = np.zeros(left.size, dtype=np.float64)
    for k in prange(left.size):
        a = ids[offsets[left[k]]:offsets[left[k] + 1]]
        b = ids[offsets[right[k]]:offsets[right[k] + 1]]
        total = a.size + b.size
        if total > 0:
            out[k] = 2.0 * _sorted_overlap(a, b) / total
    return out
