"""Intra-poem and inter-poem novelty from pairwise ROUGE F1 means.

Lower scores mean more novel text.  Intra-poem novelty averages F1 over all
unordered pairs of distinct line positions in one poem.  Inter-poem novelty
averages over poem pairs in a collection under one of three modes:
``single-string`` (whole poems compared once), ``line-by-line`` (position-
aligned lines, extra lines of the longer poem ignored) and ``all-lines``
(cartesian product of line pairs).  Large collections can be undersampled by
drawing poem pairs uniformly without replacement from a recorded seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from ..corpus import Poem, PoemCollection, TokenPolicy, tokenize
from .kernels import encode_units, pairwise_f1
from .rouge import RougeScore, rouge_n

INTER_MODES = ("single-string", "line-by-line", "all-lines")


class TooFewLinesError(ValueError):
    """Raised when intra-poem novelty is asked of a poem with under 2 lines."""


class TooFewPoemsError(ValueError):
    """Raised when a collection has too few (eligible) poems for the scope."""


@dataclass(frozen=True)
class NoveltyReport:
    """Per-unit novelty scores and their mean for one collection run."""

    scope: str                                # "intra" | "inter"
    n: int
    per_unit: tuple[tuple[str, float], ...]   # (poem id or "id1|id2", mean f1)
    mean: float
    mode: str | None = None                   # inter only
    sampled: bool = False
    seed: int | None = None


def _line_tokens(poem: Poem, policy: TokenPolicy) -> list[list[str]]:
    return [tokenize(line, policy) for line in poem.lines]


def _poem_tokens(poem: Poem, policy: TokenPolicy) -> list[str]:
    tokens: list[str] = []
    for line in poem.lines:
        tokens.extend(tokenize(line, policy))
    return tokens


def _mean_pair_f1(units: Sequence[Sequence[str]], left: np.ndarray,
                  right: np.ndarray, n: int) -> np.ndarray:
    ids, offsets = encode_units(units, n)
    return pairwise_f1(ids, offsets, left, right)


def intra_poem_novelty(poem: Poem, n: int = 1,
                       policy: TokenPolicy = TokenPolicy()) -> float:
    """Mean ROUGE-N F1 over all unordered pairs of distinct line positions.

    Identical text at two positions still counts as a pair; only a line
    paired with itself is excluded.
    """
    lines = _line_tokens(poem, policy)
    if len(lines) < 2:
        raise TooFewLinesError(f"poem {poem.id!r} has {len(lines)} line(s); need 2")
    pairs = list(combinations(range(len(lines)), 2))
    left = np.array([i for i, _ in pairs], dtype=np.int64)
    right = np.array([j for _, j in pairs], dtype=np.int64)
    return float(_mean_pair_f1(lines, left, right, n).mean())


def inter_single_string(p1: Poem, p2: Poem, n: int = 1,
                        policy: TokenPolicy = TokenPolicy()) -> RougeScore:
    """Compare two poems as single token strings, one ROUGE call."""
    return rouge_n(_poem_tokens(p1, policy), _poem_tokens(p2, policy), n)


def inter_line_by_line(p1: Poem, p2: Poem, n: int = 1,
                       policy: TokenPolicy = TokenPolicy()) -> float:
    """Mean F1 over position-aligned lines; the longer poem's tail is ignored."""
    lines1 = _line_tokens(p1, policy)
    lines2 = _line_tokens(p2, policy)
    m = min(len(lines1), len(lines2))
    units = lines1[:m] + lines2[:m]
    left = np.arange(m, dtype=np.int64)
    right = left + m
    return float(_mean_pair_f1(units, left, right, n).mean())


def inter_all_lines(p1: Poem, p2: Poem, n: int = 1,
                    policy: TokenPolicy = TokenPolicy()) -> float:
    """Mean F1 over the cartesian product of the two poems' lines."""
    lines1 = _line_tokens(p1, policy)
    lines2 = _line_tokens(p2, policy)
    left = np.repeat(np.arange(len(lines1), dtype=np.int64), len(lines2))
    right = len(lines1) + np.tile(np.arange(len(lines2), dtype=np.int64), len(lines1))
    return float(_mean_pair_f1(lines1 + lines2, left, right, n).mean())


def _select_pairs(count: int, sample: tuple[int, int] | None) -> tuple[list[tuple[int, int]], bool]:
    pairs = list(combinations(range(count), 2))
    if sample is None:
        return pairs, False
    requested, seed = sample
    if requested >= len(pairs):
        return pairs, False
    rng = np.random.Generator(np.random.PCG64(seed))
    chosen = rng.choice(len(pairs), size=requested, replace=False)
    return [pairs[i] for i in np.sort(chosen)], True


def collection_novelty(coll: PoemCollection, scope: str, mode: str = "all-lines",
                       n: int = 1, policy: TokenPolicy = TokenPolicy(),
                       sample: tuple[int, int] | None = None) -> NoveltyReport:
    """Novelty report over a collection.

    ``scope="intra"`` averages intra-poem novelty over every poem with at
    least two lines (others are skipped).  ``scope="inter"`` averages the
    chosen mode over all unordered distinct poem pairs, or over
    ``sample=(pair_count, seed)`` pairs drawn uniformly without replacement.
    The pair set is drawn up front, so results are seed-deterministic.
    """
    if scope == "intra":
        eligible = [p for p in coll.poems if p.line_count >= 2]
        if not eligible:
            raise TooFewPoemsError("intra novelty needs at least one poem with 2+ lines")
        per_unit = tuple((p.id, intra_poem_novelty(p, n, policy)) for p in eligible)
        mean = float(np.mean([score for _, score in per_unit]))
        return NoveltyReport(scope="intra", n=n, per_unit=per_unit, mean=mean)

    if scope != "inter":
        raise ValueError(f"unknown scope {scope!r}")
    if mode not in INTER_MODES:
        raise ValueError(f"unknown inter mode {mode!r}")
    if len(coll.poems) < 2:
        raise TooFewPoemsError("inter novelty needs at least two poems")

    poems = coll.poems
    pairs, sampled = _select_pairs(len(poems), sample)
    seed = sample[1] if sample is not None else None

    if mode == "single-string":
        units: list[list[str]] = [_poem_tokens(p, policy) for p in poems]
        left = np.array([i for i, _ in pairs], dtype=np.int64)
        right = np.array([j for _, j in pairs], dtype=np.int64)
        scores = _mean_pair_f1(units, left, right, n)
        pair_scores = [float(s) for s in scores]
    else:
        # One batched kernel call over every line pair of every poem pair.
        line_units: list[list[str]] = []
        poem_start: list[int] = []
        for poem in poems:
            poem_start.append(len(line_units))
            line_units.extend(_line_tokens(poem, policy))
        left_parts: list[np.ndarray] = []
        right_parts: list[np.ndarray] = []
        bounds = [0]
        for i, j in pairs:
            li, lj = poems[i].line_count, poems[j].line_count
            if mode == "line-by-line":
                m = min(li, lj)
                il = poem_start[i] + np.arange(m, dtype=np.int64)
                jr = poem_start[j] + np.arange(m, dtype=np.int64)
            else:
                il = poem_start[i] + np.repeat(np.arange(li, dtype=np.int64), lj)
                jr = poem_start[j] + np.tile(np.arange(lj, dtype=np.int64), li)
            left_parts.append(il)
            right_parts.append(jr)
            bounds.append(bounds[-1] + il.size)
        scores = _mean_pair_f1(line_units, np.concatenate(left_parts),
                               np.concatenate(right_parts), n)
        pair_scores = [float(scores[bounds[k]:bounds[k + 1]].mean())
                       for k in range(len(pairs))]

    per_unit = tuple((f"{poems[i].id}|{poems[j].id}", score)
                     for (i, j), score in zip(pairs, pair_scores))
    mean = float(np.mean(pair_scores))
    return NoveltyReport(scope="inter", n=n, per_unit=per_unit, mean=mean,
                         mode=mode, sampled=sampled, seed=seed)
