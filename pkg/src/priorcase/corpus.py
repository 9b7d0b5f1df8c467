"""Corpus loading and text normalization.

A corpus directory holds plain-text judgments plus three JSON files
describing the candidate pool, the query splits, and the gold citation
links:

    documents/<doc_id>.txt
    splits.json      {"train": [...], "validation": [...], "test": [...]}
    citations.json   {query_id: [cited candidate ids]}
    candidates.json  [candidate ids]

Document ids are file stems. Citation occurrences inside the text are
expected to already be substituted by the reserved marker ``<CITATION>``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

CITATION_MARKER = "<CITATION>"

SPLIT_NAMES = ("train", "validation", "test")

DEFAULT_HONORIFICS = ("dr", "mr", "mrs", "ms", "hon", "prof", "smt", "shri")

DEFAULT_SHORT_FORMS = {
    "no": "number",
    "nos": "numbers",
    "addl": "additional",
    "govt": "government",
}


class CorpusError(Exception):
    """A corpus directory is missing files or fails validation."""


@dataclass(frozen=True)
class NormalizedDocument:
    """A cleaned legal document; the unit of retrieval."""

    doc_id: str
    text: str
    is_query: bool = False


@dataclass(frozen=True)
class CorpusManifest:
    candidate_ids: frozenset[str]
    splits: dict[str, list[str]]
    gold: dict[str, frozenset[str]]

    @property
    def query_ids(self) -> list[str]:
        """All query ids in split order (train, validation, test)."""
        out: list[str] = []
        for name in SPLIT_NAMES:
            out.extend(self.splits[name])
        return out


# Characters other than letters, digits, whitespace and sentence
# punctuation are deleted; the citation marker is handled separately.
_DISALLOWED = re.compile(r"[^A-Za-z0-9\s.,;:?!]")
_INITIALS = re.compile(r"(?:\b[A-Za-z]\.\s*)+")
_WS = re.compile(r"\s+")


def _compile_dotted(words) -> re.Pattern:
    alt = "|".join(re.escape(w) for w in words)
    return re.compile(rf"\b(?:{alt})\.", re.IGNORECASE)


def normalize_text(
    raw: str,
    honorifics=DEFAULT_HONORIFICS,
    short_forms: Mapping[str, str] = DEFAULT_SHORT_FORMS,
) -> str:
    """Apply the ingestion cleaning rules to ``raw``; total and idempotent.

    Honorific abbreviations are dropped, single-letter dotted initials are
    dropped, dotted short forms are expanded to full words, and characters
    other than letters, digits, whitespace and sentence punctuation are
    removed. ``<CITATION>`` markers pass through verbatim.
    """
    hon_re = _compile_dotted(honorifics)
    sf_re = _compile_dotted(short_forms)
    lowered = {k.lower(): v for k, v in short_forms.items()}

    def expand(m: re.Match) -> str:
        return lowered[m.group(0)[:-1].lower()]

    def clean(segment: str) -> str:
        segment = _DISALLOWED.sub("", segment)
        segment = sf_re.sub(expand, segment)
        segment = hon_re.sub(" ", segment)
        segment = _INITIALS.sub(" ", segment)
        return segment

    parts = [clean(p) for p in raw.split(CITATION_MARKER)]
    joined = f" {CITATION_MARKER} ".join(parts)
    return _WS.sub(" ", joined).strip()


def _read_json(path: Path):
    if not path.is_file():
        raise CorpusError(f"missing corpus file: {path}")
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def load_corpus(
    root: str | Path,
    honorifics=DEFAULT_HONORIFICS,
    short_forms: Mapping[str, str] = DEFAULT_SHORT_FORMS,
) -> tuple[CorpusManifest, dict[str, NormalizedDocument]]:
    """Load and validate a corpus directory.

    Returns the manifest and every referenced document, normalized.
    Raises :class:`CorpusError` on missing files, overlapping splits, or
    gold citations pointing outside the candidate pool.
    """
    root = Path(root)
    candidates = _read_json(root / "candidates.json")
    splits_raw = _read_json(root / "splits.json")
    citations = _read_json(root / "citations.json")

    candidate_ids = frozenset(candidates)
    splits: dict[str, list[str]] = {}
    for name in SPLIT_NAMES:
        if name not in splits_raw:
            raise CorpusError(f"splits.json lacks the '{name}' split")
        splits[name] = list(splits_raw[name])

    seen: dict[str, str] = {}
    overlaps = []
    for name in SPLIT_NAMES:
        for qid in splits[name]:
            if qid in seen and seen[qid] != name:
                overlaps.append(qid)
            seen[qid] = name
    if overlaps:
        raise CorpusError(f"splits are not disjoint: {sorted(set(overlaps))}")

    query_ids = [qid for name in SPLIT_NAMES for qid in splits[name]]

    unknown = sorted(
        cited
        for cited_list in citations.values()
        for cited in cited_list
        if cited not in candidate_ids
    )
    if unknown:
        raise CorpusError(f"citations reference unknown candidate ids: {unknown}")

    gold = {qid: frozenset(citations.get(qid, ())) for qid in query_ids}

    docs_dir = root / "documents"
    if not docs_dir.is_dir():
        raise CorpusError(f"missing corpus file: {docs_dir}")

    query_set = set(query_ids)
    documents: dict[str, NormalizedDocument] = {}
    for doc_id in sorted(candidate_ids | query_set):
        path = docs_dir / f"{doc_id}.txt"
        if not path.is_file():
            raise CorpusError(f"missing corpus file: {path}")
        text = normalize_text(path.read_text(encoding="utf-8"), honorifics, short_forms)
        documents[doc_id] = NormalizedDocument(doc_id, text, is_query=doc_id in query_set)

    return CorpusManifest(candidate_ids, splits, gold), documents


def strip_citation_sentences(doc, parsed):
    """Drop every sentence containing a ``<CITATION>`` token from both views.

    Returns a new (document, parse) pair; the document text is rebuilt from
    the surviving sentences' token forms and sentence indices are
    renumbered to stay aligned. A document may come back empty.
    """
    from .conllu import ParsedDocument, ParsedSentence

    kept = [
        s
        for s in parsed.sentences
        if all(t.form != CITATION_MARKER for t in s.tokens)
    ]
    sentences = tuple(
        ParsedSentence(tokens=s.tokens, sent_index=i) for i, s in enumerate(kept)
    )
    text = " ".join(" ".join(t.form for t in s.tokens) for s in sentences)
    return (
        NormalizedDocument(doc_id=doc.doc_id, text=text, is_query=doc.is_query),
        ParsedDocument(doc_id=parsed.doc_id, sentences=sentences),
    )
