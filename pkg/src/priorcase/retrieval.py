"""Scoring and ranking: Okapi BM25, TF-IDF cosine, and Jaccard set overlap.

The index keeps per-document term frequencies plus postings arrays so a
query can be scored against the whole pool in a few vectorized passes.
For the pair-dependent event-filtered variant there is no global corpus:
each query gets its own index over its pair-filtered candidate streams.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .representations import TokenStream, event_filtered_pair, ngrams


@dataclass
class Bm25Index:
    k1: float
    b: float
    doc_ids: list[str]
    term_ids: dict[str, int]
    doc_term_freqs: list[dict[int, int]]
    doc_len: np.ndarray
    df: np.ndarray
    N: int
    avgdl: float
    _pos: dict[str, int] = field(repr=False, default_factory=dict)
    _postings: dict[int, tuple[np.ndarray, np.ndarray]] = field(
        repr=False, default_factory=dict
    )

    def row(self, doc_id: str) -> int:
        try:
            return self._pos[doc_id]
        except KeyError:
            raise KeyError(f"unknown document id {doc_id!r}") from None


@dataclass(frozen=True)
class RankedList:
    query_id: str
    entries: tuple[tuple[str, float], ...]

    def top(self, k: int) -> list[str]:
        return [cid for cid, _ in self.entries[:k]]


def build_index(streams: Iterable[TokenStream], k1: float = 1.5, b: float = 0.75) -> Bm25Index:
    """Build corpus statistics over one representation variant.

    Empty streams are legal and contribute a document length of zero;
    an empty corpus is not.
    """
    streams = list(streams)
    if not streams:
        raise ValueError("cannot build an index over zero documents")
    variants = {s.variant for s in streams}
    if len(variants) > 1:
        raise ValueError(f"streams mix representation variants: {sorted(variants)}")

    term_ids: dict[str, int] = {}
    doc_ids: list[str] = []
    pos: dict[str, int] = {}
    doc_term_freqs: list[dict[int, int]] = []
    lens: list[int] = []
    for stream in streams:
        if stream.doc_id in pos:
            raise ValueError(f"duplicate document id {stream.doc_id!r}")
        pos[stream.doc_id] = len(doc_ids)
        doc_ids.append(stream.doc_id)
        tfs: dict[int, int] = {}
        for token, tf in Counter(stream.tokens).items():
            tid = term_ids.setdefault(token, len(term_ids))
            tfs[tid] = tf
        doc_term_freqs.append(tfs)
        lens.append(len(stream.tokens))

    n_terms = len(term_ids)
    df = np.zeros(n_terms, dtype=np.int64)
    for tfs in doc_term_freqs:
        for tid in tfs:
            df[tid] += 1

    rows_acc: list[list[int]] = [[] for _ in range(n_terms)]
    tfs_acc: list[list[int]] = [[] for _ in range(n_terms)]
    for row, tfs in enumerate(doc_term_freqs):
        for tid, tf in tfs.items():
            rows_acc[tid].append(row)
            tfs_acc[tid].append(tf)
    postings = {
        tid: (np.asarray(rows_acc[tid], dtype=np.int64), np.asarray(tfs_acc[tid], dtype=np.float64))
        for tid in range(n_terms)
    }

    doc_len = np.asarray(lens, dtype=np.float64)
    n = len(doc_ids)
    return Bm25Index(
        k1=k1,
        b=b,
        doc_ids=doc_ids,
        term_ids=term_ids,
        doc_term_freqs=doc_term_freqs,
        doc_len=doc_len,
        df=df,
        N=n,
        avgdl=float(doc_len.sum() / n),
        _pos=pos,
        _postings=postings,
    )


def _okapi_idf(N: int, df: float) -> float:
    return math.log(1.0 + (N - df + 0.5) / (df + 0.5))


def _length_norm(index: Bm25Index) -> np.ndarray:
    if index.avgdl > 0:
        return index.k1 * (1.0 - index.b + index.b * index.doc_len / index.avgdl)
    return np.full(index.N, index.k1)


def bm25_scores(index: Bm25Index, query_tokens: Sequence[str]) -> np.ndarray:
    """Okapi BM25 of one query against every indexed document."""
    scores = np.zeros(index.N)
    norm = _length_norm(index)
    for token in dict.fromkeys(query_tokens):
        tid = index.term_ids.get(token)
        if tid is None:
            continue
        rows, tfs = index._postings[tid]
        idf = _okapi_idf(index.N, float(index.df[tid]))
        scores[rows] += idf * tfs * (index.k1 + 1.0) / (tfs + norm[rows])
    return scores


def bm25_score(index: Bm25Index, query_tokens: Sequence[str], doc_id: str) -> float:
    """Okapi BM25 of one query against one document.

    Query term frequency is ignored (distinct-term summation); query terms
    outside the vocabulary contribute nothing.
    """
    row = index.row(doc_id)
    dl = float(index.doc_len[row])
    if index.avgdl > 0:
        norm = index.k1 * (1.0 - index.b + index.b * dl / index.avgdl)
    else:
        norm = index.k1
    tfs = index.doc_term_freqs[row]
    score = 0.0
    for token in dict.fromkeys(query_tokens):
        tid = index.term_ids.get(token)
        if tid is None or tid not in tfs:
            continue
        tf = tfs[tid]
        idf = _okapi_idf(index.N, float(index.df[tid]))
        score += idf * tf * (index.k1 + 1.0) / (tf + norm)
    return score


def tfidf_cosine_score(index: Bm25Index, query_tokens: Sequence[str], doc_id: str) -> float:
    """Cosine of L2-normalized tf-idf vectors, idf = ln((1+N)/(1+df)) + 1.

    Query terms outside the vocabulary carry no dimension. Returns 0 when
    either vector is zero.
    """
    row = index.row(doc_id)
    n = index.N

    def idf(tid: int) -> float:
        return math.log((1.0 + n) / (1.0 + float(index.df[tid]))) + 1.0

    q: dict[int, float] = {}
    for token, tf in Counter(query_tokens).items():
        tid = index.term_ids.get(token)
        if tid is not None:
            q[tid] = tf * idf(tid)
    d = {tid: tf * idf(tid) for tid, tf in index.doc_term_freqs[row].items()}
    qn = math.sqrt(sum(v * v for v in q.values()))
    dn = math.sqrt(sum(v * v for v in d.values()))
    if qn == 0.0 or dn == 0.0:
        return 0.0
    dot = sum(w * d[tid] for tid, w in q.items() if tid in d)
    return dot / (qn * dn)


def jaccard_score(a: set[str], b: set[str]) -> float:
    """Intersection over union of two event-key sets; 0 when both are empty."""
    if not a and not b:
        return 0.0
    return len(a & b) / len(a | b)


def _sorted_entries(scored: Iterable[tuple[str, float]]) -> tuple[tuple[str, float], ...]:
    return tuple(sorted(scored, key=lambda e: (-e[1], e[0])))


def rank(
    index: Bm25Index,
    query_tokens: Sequence[str],
    pool: Iterable[str],
    query_id: str,
    scorer: str = "bm25",
) -> RankedList:
    """Rank a candidate pool for one query, ties broken by id.

    The query's own id is excluded from the ranking.
    """
    pool = [cid for cid in pool if cid != query_id]
    if not pool:
        raise ValueError(f"empty candidate pool for query {query_id!r}")
    if scorer == "bm25":
        scores = bm25_scores(index, query_tokens)
        scored = ((cid, float(scores[index.row(cid)])) for cid in pool)
    elif scorer == "tfidf_cosine":
        scored = ((cid, tfidf_cosine_score(index, query_tokens, cid)) for cid in pool)
    else:
        raise ValueError(f"unknown scorer {scorer!r}")
    return RankedList(query_id=query_id, entries=_sorted_entries(scored))


def jaccard_rank(
    query_keys: set[str],
    candidate_keys: Mapping[str, set[str]],
    pool: Iterable[str],
    query_id: str,
) -> RankedList:
    """Rank by event-set overlap; same ordering contract as :func:`rank`."""
    pool = [cid for cid in pool if cid != query_id]
    if not pool:
        raise ValueError(f"empty candidate pool for query {query_id!r}")
    scored = ((cid, jaccard_score(query_keys, candidate_keys[cid])) for cid in pool)
    return RankedList(query_id=query_id, entries=_sorted_entries(scored))


def pairwise_filtered_rank(
    query_doc,
    candidate_docs,
    events,
    parses,
    config,
) -> RankedList:
    """Event-filtered ranking for one query.

    For every candidate, both members of the pair are reduced to the words
    of the sentences behind their shared events; the per-query corpus of
    filtered candidate streams is indexed, and each candidate is scored
    against its own filtered query stream under n-gram BM25 (or the TF-IDF
    cosine toggle). Disjoint pairs score exactly 0.
    """
    qid = query_doc.doc_id
    q_events = events[qid]
    q_parsed = parses[qid]
    cand_streams: list[TokenStream] = []
    q_tokens: dict[str, list[str]] = {}
    pool: list[str] = []
    for cand in candidate_docs:
        if cand.doc_id == qid:
            continue
        pool.append(cand.doc_id)
        qs, cs = event_filtered_pair(
            query_doc,
            q_events,
            cand,
            events[cand.doc_id],
            q_parsed,
            parses[cand.doc_id],
            keep_citation_marker=config.keep_citation_marker,
        )
        cand_streams.append(
            TokenStream(
                doc_id=cs.doc_id,
                variant=cs.variant,
                tokens=tuple(ngrams(cs.tokens, config.ngram_order, config.cumulative)),
            )
        )
        q_tokens[cand.doc_id] = ngrams(qs.tokens, config.ngram_order, config.cumulative)
    if not pool:
        raise ValueError(f"empty candidate pool for query {qid!r}")

    index = build_index(cand_streams, k1=config.k1, b=config.b)
    if config.scorer == "tfidf_cosine":
        scored = ((cid, tfidf_cosine_score(index, q_tokens[cid], cid)) for cid in pool)
    else:
        scored = ((cid, bm25_score(index, q_tokens[cid], cid)) for cid in pool)
    return RankedList(query_id=qid, entries=_sorted_entries(scored))
