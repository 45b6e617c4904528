"""Backend selection and n-gram encoding for the pairwise F1 kernels.

The numba backend is used when available; setting the environment variable
``POEMETRICS_NUMBA`` to ``0``/``false``/``off``/``no`` forces the pure-numpy
fallback.  Both backends compute identical values: F1 depends only on the
integer multiset intersection of the encoded n-gram ids.
"""

from __future__ import annotations

import os
from typing import Sequence

import numpy as np


def _select_backend():
    flag = os.environ.get("POEMETRICS_NUMBA", "").strip().lower()
    if flag in {"0", "false", "off", "no"}:
        from . import _kernels_numpy
        return _kernels_numpy
    try:
        from . import _kernels_numba
        return _kernels_numba
    except ImportError:
        from . import _kernels_numpy
        return _kernels_numpy


_backend = _select_backend()
pairwise_f1 = _backend.pairwise_f1


def active_backend() -> str:
    return _backend.BACKEND


def encode_units(token_lists: Sequence[Sequence[str]], n: int) -> tuple[np.ndarray, np.ndarray]:
    """Encode token sequences as sorted n-gram id arrays.

    Returns a flat int64 id array and an offsets array such that unit ``u``
    occupies ``ids[offsets[u]:offsets[u + 1]]``, sorted ascending.  The id
    table is shared across units, so equal n-grams get equal ids.
    """
    table: dict[tuple[str, ...], int] = {}
    chunks: list[np.ndarray] = []
    offsets = np.zeros(len(token_lists) + 1, dtype=np.int64)
    for u, tokens in enumerate(token_lists):
        unit_ids = []
        for i in range(len(tokens) - n + 1):
            gram = tuple(tokens[i:i + n])
            gram_id = table.get(gram)
            if gram_id is None:
                gram_id = len(table)
                table[gram] = gram_id
            unit_ids.append(gram_id)
        chunk = np.sort(np.asarray(unit_ids, dtype=np.int64))
        chunks.append(chunk)
        offsets[u + 1] = offsets[u] + chunk.size
    ids = np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.int64)
    return ids, offsets
