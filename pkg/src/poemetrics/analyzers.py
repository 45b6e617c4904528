"""Built-in analyzers wired into a default registry.

Structural counts and novelty are language independent; syllable, scansion
and rhyme analyzers read the pronunciation lexicon and are registered under
the configured language.  The fluency aspect is a reserved slot with no
analyzers yet, kept so reports stay schema-stable.
"""

from __future__ import annotations

from typing import Callable, MutableMapping

from .corpus import Poem, PoemCollection, TokenPolicy
from .framework import AnalyzerDescriptor, AnalyzerRegistry
from .lexsem import (
    Embedder,
    RetrievalReport,
    fit_collection_embedder,
    topic_retrieval_f1,
    type_token_ratio,
)
from .novelty import NoveltyReport, collection_novelty, intra_poem_novelty
from .phonetics import PronLexicon, stress_pattern_line, syllable_count_line
from .rhyme import rhyme_pattern_count, rhyme_richness, rhyme_scheme

EmbedderFactory = Callable[[PoemCollection], Embedder]


def default_registry(lexicon: PronLexicon | None = None,
                     policy: TokenPolicy = TokenPolicy(),
                     language: str = "en",
                     rouge_order: int = 1,
                     novelty_mode: str = "all-lines",
                     sample: tuple[int, int] | None = None,
                     embedder_factory: EmbedderFactory | None = None,
                     novelty_cache: MutableMapping | None = None) -> AnalyzerRegistry:
    """Build the standard registry, its analyzers closed over the resources.

    ``novelty_cache`` memoizes the full per-unit novelty reports keyed by
    ``(scope, id(collection))``, so callers wanting the detail behind the
    collection means (like the report writer) can pass a dict and read it
    back instead of recomputing the pairwise scores.
    """
    if embedder_factory is None:
        embedder_factory = lambda coll: fit_collection_embedder(coll, policy)
    cache: MutableMapping = novelty_cache if novelty_cache is not None else {}

    def intra_report(coll: PoemCollection) -> NoveltyReport:
        key = ("intra", id(coll))
        if key not in cache:
            cache[key] = collection_novelty(coll, "intra", n=rouge_order, policy=policy)
        return cache[key]

    def inter_report(coll: PoemCollection) -> NoveltyReport:
        key = ("inter", id(coll))
        if key not in cache:
            cache[key] = collection_novelty(coll, "inter", mode=novelty_mode,
                                            n=rouge_order, policy=policy, sample=sample)
        return cache[key]

    registry = AnalyzerRegistry()

    def add(analyzer_id, display_name, aspect, scope, fn, lang="independent"):
        registry.register(
            AnalyzerDescriptor(analyzer_id, display_name, aspect, scope, lang), fn)

    # Poetic features, structural.
    add("stanza-count", "stanza count", "poetic", "single-poem",
        lambda p: ("stanza-count", p.stanza_count))
    add("line-count", "line count", "poetic", "single-poem",
        lambda p: ("line-count", p.line_count))
    add("lines-per-stanza", "lines per stanza", "poetic", "single-poem",
        lambda p: ("lines-per-stanza", [len(s) for s in p.stanzas]))

    # Poetic features backed by the pronunciation lexicon.
    def syllables_per_line(p: Poem):
        return "syllables-per-line", [syllable_count_line(line, lexicon, policy)[0]
                                      for line in p.lines]

    def scansion(p: Poem):
        patterns = [stress_pattern_line(line, lexicon, policy)[0].pattern
                    for line in p.lines]
        return "scansion", "|".join(patterns)

    def scheme(p: Poem):
        return "rhyme-scheme", rhyme_scheme(p, lexicon, policy).notation

    def pattern_count(p: Poem):
        return "rhyme-pattern-count", rhyme_pattern_count(rhyme_scheme(p, lexicon, policy))

    def richness(p: Poem):
        return "rhyme-richness", rhyme_richness(rhyme_scheme(p, lexicon, policy))

    add("syllables-per-line", "syllables per line", "poetic", "single-poem",
        syllables_per_line, lang=language)
    add("scansion", "lexical stress per line", "poetic", "single-poem",
        scansion, lang=language)
    add("rhyme-scheme", "rhyme scheme", "poetic", "single-poem", scheme, lang=language)
    add("rhyme-pattern-count", "repeated rhyme patterns", "poetic", "single-poem",
        pattern_count, lang=language)
    add("rhyme-richness", "rhyme richness", "poetic", "single-poem",
        richness, lang=language)

    # Novelty.
    add("intra-novelty", "intra-poem novelty", "novelty", "single-poem",
        lambda p: ("intra-novelty", intra_poem_novelty(p, rouge_order, policy)))
    add("intra-novelty-mean", "mean intra-poem novelty", "novelty", "collection",
        lambda c: ("intra-novelty-mean", intra_report(c).mean))
    add("inter-novelty-mean", "mean inter-poem novelty", "novelty", "collection",
        lambda c: ("inter-novelty-mean", inter_report(c).mean))

    # Lexico-semantics.
    add("type-token-ratio", "type/token ratio", "lexsem", "single-poem",
        lambda p: ("type-token-ratio", type_token_ratio([p], policy)))
    add("collection-type-token-ratio", "pooled type/token ratio", "lexsem", "collection",
        lambda c: ("collection-type-token-ratio", type_token_ratio(c.poems, policy)))

    retrieval_cache: dict[int, RetrievalReport] = {}

    def retrieval(coll: PoemCollection) -> RetrievalReport:
        key = id(coll)
        if key not in retrieval_cache:
            retrieval_cache[key] = topic_retrieval_f1(coll, embedder_factory(coll))
        return retrieval_cache[key]

    add("topic-retrieval-f1", "topic retrieval macro F1", "lexsem", "collection",
        lambda c: ("topic-retrieval-f1", retrieval(c).macro_f1))
    add("topic-retrieval-by-topic", "topic retrieval F1 by topic", "lexsem", "collection",
        lambda c: ("topic-retrieval-by-topic",
                   {s.topic: s.f1 for s in retrieval(c).per_topic}))

    # Fluency: reserved aspect, no built-in analyzers yet.
    return registry
