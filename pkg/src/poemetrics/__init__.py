"""poemetrics: analysis and evaluation metrics for poetry.

Measures poems along four aspect families: poetic form (stanzas, lines,
syllables, scansion, rhyme), novelty (n-gram overlap within and across
poems), lexico-semantics (type/token ratio, topic retrieval) and a reserved
fluency slot.  Analysis produces named measurements; evaluation compares
them to exact or range expectations.
"""

__version__ = "0.1.0"

from .analyzers import default_registry
from .corpus import (
    EmptyPoemError,
    LoadIssue,
    Poem,
    PoemCollection,
    TokenPolicy,
    load_collection,
    parse_poem,
    tokenize,
)
from .framework import (
    AnalysisResult,
    AnalyzerDescriptor,
    AnalyzerRegistry,
    DuplicateIdError,
    EvaluationResult,
    Expectation,
    evaluate,
    load_expectations,
)
from .lexsem import (
    EmbeddingServiceClient,
    RetrievalReport,
    TfidfEmbedder,
    cosine_similarity,
    fit_collection_embedder,
    fit_tfidf,
    retrieve_topic,
    topic_retrieval_f1,
    type_token_ratio,
)
from .novelty import (
    NoveltyReport,
    RougeScore,
    collection_novelty,
    inter_all_lines,
    inter_line_by_line,
    inter_single_string,
    intra_poem_novelty,
    rouge_n,
)
from .phonetics import (
    PronLexicon,
    StressPattern,
    load_lexicon,
    stress_pattern_line,
    syllable_count_line,
    syllable_count_word,
)
from .rhyme import (
    RhymeScheme,
    RimeKey,
    rhyme_pattern_count,
    rhyme_richness,
    rhyme_scheme,
    rime_key,
)
