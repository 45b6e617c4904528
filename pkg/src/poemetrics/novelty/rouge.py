"""ROUGE-N n-gram overlap between two token sequences.

Overlap uses clipped multiset counts: each distinct n-gram contributes the
minimum of its counts in candidate and reference.  Zero denominators yield
zero components rather than errors, so scores stay total over empty lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class InvalidOrderError(ValueError):
    """Raised when the n-gram order is below 1."""


@dataclass(frozen=True)
class RougeScore:
    """Precision/recall/F1 for one candidate-reference comparison."""

    precision: float
    recall: float
    f1: float


def ngram_counts(tokens: Sequence[str], n: int) -> dict[tuple[str, ...], int]:
    counts: dict[tuple[str, ...], int] = {}
    for i in range(len(tokens) - n + 1):
        gram = tuple(tokens[i:i + n])
        counts[gram] = counts.get(gram, 0) + 1
    return counts


def rouge_n(candidate: Sequence[str], reference: Sequence[str], n: int = 1) -> RougeScore:
    """ROUGE-N of a candidate token list against a reference token list.

    F1 is the harmonic mean of precision and recall, computed directly as
    ``2 * overlap / (candidate_ngrams + reference_ngrams)`` so that the
    batched kernels reproduce it bit for bit.
    """
    if n < 1:
        raise InvalidOrderError(f"n-gram order must be >= 1, got {n}")
    cand = ngram_counts(candidate, n)
    ref = ngram_counts(reference, n)
    overlap = sum(min(count, ref[gram]) for gram, count in cand.items() if gram in ref)
    cand_total = len(candidate) - n + 1 if len(candidate) >= n else 0
    ref_total = len(reference) - n + 1 if len(reference) >= n else 0
    precision = overlap / cand_total if cand_total else 0.0
    recall = overlap / ref_total if ref_total else 0.0
    f1 = 2.0 * overlap / (cand_total + ref_total) if cand_total + ref_total else 0.0
    return RougeScore(precision=precision, recall=recall, f1=f1)
