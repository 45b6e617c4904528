from .kernels import active_backend
from .pairwise import (
    INTER_MODES,
    NoveltyReport,
    TooFewLinesError,
    TooFewPoemsError,
    collection_novelty,
    inter_all_lines,
    inter_line_by_line,
    inter_single_string,
    intra_poem_novelty,
)
from .rouge import InvalidOrderError, RougeScore, ngram_counts, rouge_n

__all__ = [
    "INTER_MODES",
    "InvalidOrderError",
    "NoveltyReport",
    "RougeScore",
    "TooFewLinesError",
    "TooFewPoemsError",
    "active_backend",
    "collection_novelty",
    "inter_all_lines",
    "inter_line_by_line",
    "inter_single_string",
    "intra_poem_novelty",
    "ngram_counts",
    "rouge_n",
]
