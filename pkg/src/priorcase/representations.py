"""Document representations: token streams under each ranking variant.

A document can be rendered as plain words, as atomic event keys, as the
flattened words of its events, or as the words of a filtered subset of
its sentences (filtered either by event overlap with a paired document or
by per-sentence labels read from an external file).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .conllu import ParsedDocument, ParsedSentence
from .corpus import CITATION_MARKER, NormalizedDocument
from .events import EventSequence, canonical_key

VARIANTS = ("words", "atomic_events", "nonatomic_events", "event_filtered", "label_filtered")

# Joins the members of an n-gram; never appears in word or event tokens.
NGRAM_SEP = "\x1f"

_WORD = re.compile(r"[a-z0-9]{2,}")


class LabelAlignmentError(Exception):
    """Sentence labels do not line up with the parsed sentence count."""


@dataclass(frozen=True)
class TokenStream:
    doc_id: str
    variant: str
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class SentenceLabels:
    doc_id: str
    labels: tuple[str, ...]


def _word_tokens(text: str, keep_citation_marker: bool = False) -> list[str]:
    """Lowercased maximal alphanumeric runs of length >= 2, in text order."""
    out: list[str] = []
    parts = text.split(CITATION_MARKER)
    for i, part in enumerate(parts):
        if i and keep_citation_marker:
            out.append(CITATION_MARKER)
        out.extend(_WORD.findall(part.lower()))
    return out


def _sentence_words(sentence: ParsedSentence, keep_citation_marker: bool) -> list[str]:
    text = " ".join(t.form for t in sentence.tokens)
    return _word_tokens(text, keep_citation_marker)


def words_stream(doc: NormalizedDocument, keep_citation_marker: bool = False) -> TokenStream:
    return TokenStream(
        doc_id=doc.doc_id,
        variant="words",
        tokens=tuple(_word_tokens(doc.text, keep_citation_marker)),
    )


def atomic_event_stream(events: EventSequence) -> TokenStream:
    """One token per event, in document order; duplicates are kept."""
    return TokenStream(
        doc_id=events.doc_id,
        variant="atomic_events",
        tokens=tuple(canonical_key(e) for e in events.events),
    )


def nonatomic_event_stream(events: EventSequence) -> TokenStream:
    """The words of every event, slot order subject/predicate/dobj/dative/pobj."""
    tokens: list[str] = []
    for e in events.events:
        for slot in (e.subject, e.predicate, e.dobj, e.dative, e.pobj):
            if slot:
                tokens.extend(slot.split(" "))
    return TokenStream(
        doc_id=events.doc_id, variant="nonatomic_events", tokens=tuple(tokens)
    )


def _filtered_sentences(
    events: EventSequence, shared: set[str], parsed: ParsedDocument
) -> list[ParsedSentence]:
    hit = {e.sent_index for e in events.events if canonical_key(e) in shared}
    return [s for s in parsed.sentences if s.sent_index in hit]


def event_filtered_pair(
    query_doc: NormalizedDocument,
    query_events: EventSequence,
    cand_doc: NormalizedDocument,
    cand_events: EventSequence,
    query_parsed: ParsedDocument,
    cand_parsed: ParsedDocument,
    keep_citation_marker: bool = False,
) -> tuple[TokenStream, TokenStream]:
    """Word streams of the sentences that emitted events shared by the pair.

    A pair with no shared events yields two empty streams.
    """
    shared = query_events.keys() & cand_events.keys()

    def build(doc_id: str, events: EventSequence, parsed: ParsedDocument) -> TokenStream:
        tokens: list[str] = []
        for sentence in _filtered_sentences(events, shared, parsed):
            tokens.extend(_sentence_words(sentence, keep_citation_marker))
        return TokenStream(doc_id=doc_id, variant="event_filtered", tokens=tuple(tokens))

    return (
        build(query_doc.doc_id, query_events, query_parsed),
        build(cand_doc.doc_id, cand_events, cand_parsed),
    )


def label_filtered_stream(
    doc: NormalizedDocument,
    parsed: ParsedDocument,
    labels: SentenceLabels,
    keep: Iterable[str],
    keep_citation_marker: bool = False,
) -> TokenStream:
    """Words of the sentences whose label is in ``keep``, in sentence order."""
    if len(labels.labels) != len(parsed.sentences):
        raise LabelAlignmentError(
            f"{doc.doc_id}: {len(labels.labels)} labels for "
            f"{len(parsed.sentences)} sentences"
        )
    keep = set(keep)
    tokens: list[str] = []
    for sentence, label in zip(parsed.sentences, labels.labels):
        if label in keep:
            tokens.extend(_sentence_words(sentence, keep_citation_marker))
    return TokenStream(doc_id=doc.doc_id, variant="label_filtered", tokens=tuple(tokens))


def load_labels(path: str | Path, doc_id: str) -> SentenceLabels:
    """Read ``labels/<doc_id>.json`` ({"labels": [...]}) for one document."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return SentenceLabels(doc_id=doc_id, labels=tuple(data["labels"]))


def ngrams(tokens: Sequence[str], n: int, cumulative: bool = True) -> list[str]:
    """Contiguous n-grams of a token list.

    Exact mode returns just the order-``n`` grams (``max(0, len - n + 1)``
    of them); cumulative mode concatenates the exact k-grams for k = 1..n.
    """
    if n < 1:
        raise ValueError(f"n-gram order must be >= 1, got {n}")
    orders = range(1, n + 1) if cumulative else (n,)
    out: list[str] = []
    for k in orders:
        if k == 1:
            out.extend(tokens)
        else:
            out.extend(
                NGRAM_SEP.join(tokens[i : i + k]) for i in range(len(tokens) - k + 1)
            )
    return out
