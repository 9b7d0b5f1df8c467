"""Brute-force reference implementations, kept independent of the package.

Everything here recomputes scores from first principles with plain loops:
no inverted index, no numpy, and its own tokenizer/n-gram/key code, so a
bug in the fast paths cannot hide in the check.
"""

import math
import re

_WORD_RE = re.compile(r"[a-z0-9]{2,}")


def okapi_bm25_oracle(corpus_tokens, query_tokens, doc_id, k1=1.5, b=0.75):
    """corpus_tokens: {doc_id: [token, ...]}."""
    n = len(corpus_tokens)
    lens = {d: len(toks) for d, toks in corpus_tokens.items()}
    avgdl = sum(lens.values()) / n
    doc = corpus_tokens[doc_id]
    score = 0.0
    for term in sorted(set(query_tokens)):
        df = sum(1 for toks in corpus_tokens.values() if term in toks)
        if df == 0:
            continue
        tf = doc.count(term)
        if tf == 0:
            continue
        idf = math.log(1.0 + (n - df + 0.5) / (df + 0.5))
        if avgdl > 0:
            norm = k1 * (1.0 - b + b * lens[doc_id] / avgdl)
        else:
            norm = k1
        score += idf * tf * (k1 + 1.0) / (tf + norm)
    return score


def tfidf_cosine_oracle(corpus_tokens, query_tokens, doc_id):
    n = len(corpus_tokens)
    vocab = sorted({t for toks in corpus_tokens.values() for t in toks})

    def idf(term):
        df = sum(1 for toks in corpus_tokens.values() if term in toks)
        return math.log((1.0 + n) / (1.0 + df)) + 1.0

    def vector(tokens):
        return [tokens.count(term) * idf(term) for term in vocab]

    q = vector([t for t in query_tokens if t in set(vocab)])
    d = vector(corpus_tokens[doc_id])
    qn = math.sqrt(sum(x * x for x in q))
    dn = math.sqrt(sum(x * x for x in d))
    if qn == 0 or dn == 0:
        return 0.0
    return sum(a * c for a, c in zip(q, d)) / (qn * dn)


def ngram_oracle(tokens, n, cumulative):
    out = []
    orders = range(1, n + 1) if cumulative else [n]
    for k in orders:
        for i in range(len(tokens) - k + 1):
            out.append("\x1f".join(tokens[i : i + k]))
    return out


def event_key_oracle(event):
    slots = [event.subject, event.predicate, event.dobj, event.dative, event.pobj]
    return "|".join(s if s else "" for s in slots)


def sentence_words_oracle(sentence):
    text = " ".join(t.form for t in sentence.tokens).lower()
    return [w for w in _WORD_RE.findall(text)]


def filtered_rank_oracle(query_id, pool, events, parses, n, cumulative, k1=1.5, b=0.75):
    """Recompute the event-filtered ranking for one query from scratch."""
    q_keys = {event_key_oracle(e) for e in events[query_id].events}
    corpus_tokens = {}
    query_tokens = {}
    for cid in pool:
        if cid == query_id:
            continue
        c_keys = {event_key_oracle(e) for e in events[cid].events}
        shared = q_keys & c_keys

        def doc_words(doc_id):
            hit_sents = {
                e.sent_index
                for e in events[doc_id].events
                if event_key_oracle(e) in shared
            }
            words = []
            for s in parses[doc_id].sentences:
                if s.sent_index in hit_sents:
                    words.extend(sentence_words_oracle(s))
            return words

        corpus_tokens[cid] = ngram_oracle(doc_words(cid), n, cumulative)
        query_tokens[cid] = ngram_oracle(doc_words(query_id), n, cumulative)

    scored = [
        (cid, okapi_bm25_oracle(corpus_tokens, query_tokens[cid], cid, k1, b))
        for cid in corpus_tokens
    ]
    return sorted(scored, key=lambda e: (-e[1], e[0]))


def macro_metrics_oracle(rankings, gold, k):
    """Deliberately macro-averaged: per-query P/R/F1, then the mean."""
    ps, rs, fs = [], [], []
    for ranking in rankings:
        cited = gold[ranking.query_id]
        top = [cid for cid, _ in ranking.entries[:k]]
        hits = sum(1 for cid in top if cid in cited)
        p = hits / len(top) if top else 0.0
        r = hits / len(cited) if cited else 0.0
        f = 0.0 if p + r == 0 else 2 * p * r / (p + r)
        ps.append(p)
        rs.append(r)
        fs.append(f)
    n = len(ps)
    return (sum(ps) / n, sum(rs) / n, sum(fs) / n)
