"""Unsupervised prior-case retrieval over event-based document representations."""

__version__ = "0.1.0"

from .config import ConfigError, RunConfig
from .conllu import (
    ConlluError,
    ParsedDocument,
    ParsedSentence,
    ParsedToken,
    children,
    read_conllu,
    to_conllu,
)
from .corpus import (
    CITATION_MARKER,
    CorpusError,
    CorpusManifest,
    NormalizedDocument,
    load_corpus,
    normalize_text,
    strip_citation_sentences,
)
from .evaluation import (
    MetricsPoint,
    MetricsReport,
    TimingReport,
    benchmark,
    evaluate_run,
    f1_score,
    micro_metrics,
    select_k,
    sweep_k,
)
from .events import (
    Event,
    EventSequence,
    canonical_key,
    collect_arguments,
    extract_events,
)
from .pipeline import Pipeline, RunManifest, run_pipeline
from .representations import (
    LabelAlignmentError,
    SentenceLabels,
    TokenStream,
    atomic_event_stream,
    event_filtered_pair,
    label_filtered_stream,
    ngrams,
    nonatomic_event_stream,
    words_stream,
)
from .retrieval import (
    Bm25Index,
    RankedList,
    bm25_score,
    build_index,
    jaccard_score,
    pairwise_filtered_rank,
    rank,
    tfidf_cosine_score,
)

__all__ = [
    "CITATION_MARKER",
    "Bm25Index",
    "ConfigError",
    "ConlluError",
    "CorpusError",
    "CorpusManifest",
    "Event",
    "EventSequence",
    "LabelAlignmentError",
    "MetricsPoint",
    "MetricsReport",
    "NormalizedDocument",
    "ParsedDocument",
    "ParsedSentence",
    "ParsedToken",
    "Pipeline",
    "RankedList",
    "RunConfig",
    "RunManifest",
    "SentenceLabels",
    "TimingReport",
    "TokenStream",
    "atomic_event_stream",
    "benchmark",
    "bm25_score",
    "build_index",
    "canonical_key",
    "children",
    "collect_arguments",
    "evaluate_run",
    "event_filtered_pair",
    "extract_events",
    "f1_score",
    "jaccard_score",
    "label_filtered_stream",
    "load_corpus",
    "micro_metrics",
    "ngrams",
    "nonatomic_event_stream",
    "normalize_text",
    "pairwise_filtered_rank",
    "rank",
    "read_conllu",
    "run_pipeline",
    "select_k",
    "strip_citation_sentences",
    "sweep_k",
    "tfidf_cosine_score",
    "to_conllu",
    "words_stream",
]
