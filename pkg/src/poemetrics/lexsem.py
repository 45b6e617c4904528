"""Lexico-semantic metrics: type/token ratio and topic retrieval.

Topic retrieval ranks poems by cosine similarity between embedded poem text
and the embedded topic string, then scores the top-k against the topic's
gold poems.  The built-in embedder is TF-IDF (deterministic, dependency
light); an HTTP client for an external embedding service covers transformer
models behind the same interface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Protocol, Sequence

import numpy as np
import requests

from .corpus import Poem, PoemCollection, TokenPolicy, tokenize


class NoTokensError(ValueError):
    """Raised when a type/token ratio is asked of token-free input."""


class EmptyCorpusError(ValueError):
    """Raised when a TF-IDF embedder is fitted on an empty corpus."""


class DimensionMismatchError(ValueError):
    """Raised when cosine similarity gets vectors of different dimensions."""


class KTooLargeError(ValueError):
    """Raised when more poems are requested than the collection holds."""


class NoTopicsError(ValueError):
    """Raised when topic retrieval is asked of a topicless collection."""


class EmbeddingServiceError(RuntimeError):
    """Raised when the external embedding service fails or misbehaves."""


def poem_text(poem: Poem) -> str:
    """Poem text used for embedding: all lines space-joined in stanza order."""
    return " ".join(poem.lines)


def type_token_ratio(poems: Sequence[Poem],
                     policy: TokenPolicy = TokenPolicy()) -> float:
    """Distinct tokens over total tokens, pooled across all given poems."""
    types: set[str] = set()
    total = 0
    for poem in poems:
        for line in poem.lines:
            for token in tokenize(line, policy):
                types.add(token)
                total += 1
    if total == 0:
        raise NoTokensError("no tokens in the given poems")
    return len(types) / total


class Embedder(Protocol):
    """Deterministic text encoder: same text, same vector."""

    embedder_id: str
    dimension: int

    def embed(self, text: str) -> np.ndarray: ...

    def embed_many(self, texts: Sequence[str]) -> np.ndarray: ...


class TfidfEmbedder:
    """TF-IDF document vectors over a fixed fitted vocabulary.

    Component for term t is ``tf(t, doc) * idf(t)`` with
    ``idf = ln((1 + D) / (1 + df(t))) + 1``; vectors are L2-normalized.
    Terms unseen at fit time are ignored at embed time, so a text with no
    known terms embeds to the zero vector.
    """

    def __init__(self, vocabulary: dict[str, int], idf: np.ndarray,
                 policy: TokenPolicy) -> None:
        self._vocabulary = vocabulary
        self._idf = idf
        self._policy = policy
        self.embedder_id = "tfidf"
        self.dimension = len(vocabulary)

    @classmethod
    def fit(cls, corpus: Sequence[str],
            policy: TokenPolicy = TokenPolicy()) -> "TfidfEmbedder":
        if not corpus:
            raise EmptyCorpusError("TF-IDF needs at least one document")
        doc_count = len(corpus)
        df: dict[str, int] = {}
        for text in corpus:
            for term in set(tokenize(text, policy)):
                df[term] = df.get(term, 0) + 1
        vocabulary = {term: i for i, term in enumerate(sorted(df))}
        idf = np.zeros(len(vocabulary), dtype=np.float64)
        for term, i in vocabulary.items():
            idf[i] = math.log((1 + doc_count) / (1 + df[term])) + 1.0
        return cls(vocabulary, idf, policy)

    def embed(self, text: str) -> np.ndarray:
        vec = np.zeros(self.dimension, dtype=np.float64)
        for token in tokenize(text, self._policy):
            i = self._vocabulary.get(token)
            if i is not None:
                vec[i] += 1.0
        vec *= self._idf
        norm = np.linalg.norm(vec)
        if norm > 0.0:
            vec /= norm
        return vec

    def embed_many(self, texts: Sequence[str]) -> np.ndarray:
        return np.stack([self.embed(t) for t in texts]) if texts else \
            np.zeros((0, self.dimension), dtype=np.float64)


class EmbeddingServiceClient:
    """Client for an external embedding service speaking JSON over HTTP.

    Request body is ``{"texts": [...]}`` and the response must carry
    ``{"vectors": [[...], ...]}`` with one vector per text.  The dimension
    is checked on the first response and enforced afterwards.  Failures
    raise EmbeddingServiceError, never silently degrade to zeros.
    """

    def __init__(self, url: str, timeout: float = 30.0) -> None:
        self.url = url
        self.timeout = timeout
        self.embedder_id = f"external:{url}"
        self.dimension = 0  # unknown until the first response

    def embed_many(self, texts: Sequence[str]) -> np.ndarray:
        if not texts:
            return np.zeros((0, self.dimension), dtype=np.float64)
        try:
            response = requests.post(self.url, json={"texts": list(texts)},
                                     timeout=self.timeout)
            response.raise_for_status()
            payload = response.json()
        except requests.RequestException as exc:
            raise EmbeddingServiceError(f"embedding service call failed: {exc}") from exc
        except ValueError as exc:
            raise EmbeddingServiceError("embedding service returned invalid JSON") from exc
        vectors = payload.get("vectors")
        if not isinstance(vectors, list) or len(vectors) != len(texts):
            raise EmbeddingServiceError(
                f"expected {len(texts)} vectors, got {type(vectors).__name__}")
        matrix = np.asarray(vectors, dtype=np.float64)
        if matrix.ndim != 2:
            raise EmbeddingServiceError("vectors must be a list of equal-length rows")
        if not np.isfinite(matrix).all():
            raise EmbeddingServiceError("embedding service returned non-finite values")
        if self.dimension == 0:
            self.dimension = matrix.shape[1]
        elif matrix.shape[1] != self.dimension:
            raise EmbeddingServiceError(
                f"dimension changed from {self.dimension} to {matrix.shape[1]}")
        return matrix

    def embed(self, text: str) -> np.ndarray:
        return self.embed_many([text])[0]


def fit_tfidf(corpus: Sequence[str],
              policy: TokenPolicy = TokenPolicy()) -> TfidfEmbedder:
    return TfidfEmbedder.fit(corpus, policy)


def fit_collection_embedder(coll: PoemCollection,
                            policy: TokenPolicy = TokenPolicy()) -> TfidfEmbedder:
    """Fit TF-IDF on the collection's poem texts plus its topic strings."""
    texts = [poem_text(p) for p in coll.poems] + sorted(coll.topics)
    return TfidfEmbedder.fit(texts, policy)


def cosine_similarity(a: np.ndarray, b: np.ndarray) -> float:
    """Cosine of two vectors; zero-norm input yields similarity 0."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"dimensions differ: {a.shape} vs {b.shape}")
    norm = np.linalg.norm(a) * np.linalg.norm(b)
    if norm == 0.0:
        return 0.0
    return float(np.dot(a, b) / norm)


@dataclass(frozen=True)
class TopicScore:
    topic: str
    precision: float
    recall: float
    f1: float
    k: int


@dataclass(frozen=True)
class RetrievalReport:
    """Per-topic retrieval scores and their macro average."""

    per_topic: tuple[TopicScore, ...]
    macro_f1: float


def retrieve_topic(topic: str, coll: PoemCollection, embedder: Embedder,
                   k: int) -> list[str]:
    """Ids of the top-k poems by cosine similarity to the embedded topic.

    Ties break by poem id ascending, so rankings are deterministic.
    """
    if k > len(coll.poems):
        raise KTooLargeError(f"k={k} exceeds collection size {len(coll.poems)}")
    vectors = embedder.embed_many([poem_text(p) for p in coll.poems])
    topic_vec = embedder.embed(topic)
    ranked = sorted(
        ((cosine_similarity(vectors[i], topic_vec), p.id)
         for i, p in enumerate(coll.poems)),
        key=lambda item: (-item[0], item[1]))
    return [pid for _, pid in ranked[:k]]


def topic_retrieval_f1(coll: PoemCollection, embedder: Embedder) -> RetrievalReport:
    """Score topic retrieval with k set to each topic's gold poem count.

    With k equal to the number of gold poems, precision, recall and F1
    coincide per topic; the report macro-averages F1 over topics.
    """
    if not coll.topics:
        raise NoTopicsError("collection has no topics")
    scores: list[TopicScore] = []
    for topic in sorted(coll.topics):
        gold = {p.id for p in coll.poems if p.topic == topic}
        k = len(gold)
        retrieved = retrieve_topic(topic, coll, embedder, k)
        hits = len(gold.intersection(retrieved))
        f1 = hits / k
        scores.append(TopicScore(topic=topic, precision=f1, recall=f1, f1=f1, k=k))
    macro = float(np.mean([s.f1 for s in scores]))
    return RetrievalReport(per_topic=tuple(scores), macro_f1=macro)
