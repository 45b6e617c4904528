#!/usr/bin/env python3
"""Benchmark the pairwise ROUGE-F1 kernels: numba vs pure numpy.

Builds a synthetic collection, encodes every line once, then times the
all-lines pairwise F1 computation over every poem pair on both backends.
The first numba call is excluded as JIT warmup.

    python benchmarks/bench_novelty.py --poems 60 --lines 12
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from poemetrics.novelty import _kernels_numba, _kernels_numpy
from poemetrics.novelty.kernels import encode_units


def build_batch(poems: int, lines: int, tokens: int, vocab: int, n: int, seed: int):
    rng = random.Random(seed)
    words = [f"w{i}" for i in range(vocab)]
    line_units = []
    for _ in range(poems):
        for _ in range(lines):
            line_units.append([rng.choice(words) for _ in range(tokens)])
    ids, offsets = encode_units(line_units, n)

    left_parts, right_parts = [], []
    for i in range(poems):
        for j in range(i + 1, poems):
            li = i * lines + np.repeat(np.arange(lines, dtype=np.int64), lines)
            rj = j * lines + np.tile(np.arange(lines, dtype=np.int64), lines)
            left_parts.append(li)
            right_parts.append(rj)
    return ids, offsets, np.concatenate(left_parts), np.concatenate(right_parts)


def time_backend(fn, batch, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*batch)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--poems", type=int, default=60)
    parser.add_argument("--lines", type=int, default=12)
    parser.add_argument("--tokens", type=int, default=8)
    parser.add_argument("--vocab", type=int, default=400)
    parser.add_argument("--n", type=int, default=1)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    batch = build_batch(args.poems, args.lines, args.tokens, args.vocab,
                        args.n, args.seed)
    pairs = batch[2].size
    print(f"{args.poems} poems x {args.lines} lines, n={args.n}: "
          f"{pairs:,} line pairs")

    _kernels_numba.pairwise_f1(*batch)  # JIT warmup, excluded from timing
    numba_s = time_backend(_kernels_numba.pairwise_f1, batch, args.repeats)
    numpy_s = time_backend(_kernels_numpy.pairwise_f1, batch, args.repeats)

    out_nb = _kernels_numba.pairwise_f1(*batch)
    out_np = _kernels_numpy.pairwise_f1(*batch)
    assert np.array_equal(out_nb, out_np), "backends disagree"

    print(f"  numba : {numba_s:9.4f} s   ({pairs / numba_s:12,.0f} pairs/s)")
    print(f"  numpy : {numpy_s:9.4f} s   ({pairs / numpy_s:12,.0f} pairs/s)")
    print(f"  speedup: {numpy_s / numba_s:.1f}x")


if __name__ == "__main__":
    main()
