#!/usr/bin/env python3
# Compare the ranking variants on a three-document toy corpus.
#
# The query shares an *event* with candidate A but shares far more raw
# vocabulary with candidate B. Word-level BM25 is drawn to B; every
# event-based representation picks A.

from priorcase import (
    NormalizedDocument,
    RunConfig,
    atomic_event_stream,
    build_index,
    extract_events,
    jaccard_score,
    nonatomic_event_stream,
    pairwise_filtered_rank,
    rank,
    read_conllu,
    words_stream,
)


def sent(*rows):
    return "\n".join(
        f"{i}\t{form}\t{lemma}\t{upos}\t_\t_\t{head}\t{rel}\t_\t_"
        for i, (form, lemma, upos, head, rel) in enumerate(rows, 1)
    ) + "\n"


COURT_DISMISSED = sent(
    ("the", "the", "DET", 2, "det"),
    ("court", "court", "NOUN", 3, "nsubj"),
    ("dismissed", "dismiss", "VERB", 0, "root"),
    ("the", "the", "DET", 5, "det"),
    ("appeal", "appeal", "NOUN", 3, "dobj"),
)
WITNESS_SIGNED = sent(
    ("a", "a", "DET", 2, "det"),
    ("witness", "witness", "NOUN", 3, "nsubj"),
    ("signed", "sign", "VERB", 0, "root"),
    ("the", "the", "DET", 5, "det"),
    ("deed", "deed", "NOUN", 3, "dobj"),
)
# candidate B: the query's own words repeated, but scrambled into a
# verbless heap, so it wins on term frequency yet carries no event
WORD_HEAP = sent(
    *(
        (form, form, "NOUN", head, rel)
        for form, head, rel in [
            ("the", 0, "root"), ("court", 1, "dep"), ("appeal", 1, "dep"),
            ("dismissed", 1, "dep"), ("the", 1, "dep"), ("court", 1, "dep"),
            ("appeal", 1, "dep"), ("dismissed", 1, "dep"), ("the", 1, "dep"),
            ("court", 1, "dep"), ("appeal", 1, "dep"), ("dismissed", 1, "dep"),
        ]
    )
)

parses = {
    "query": read_conllu(COURT_DISMISSED, "query"),
    "cand_a": read_conllu(COURT_DISMISSED + "\n" + WITNESS_SIGNED, "cand_a"),
    "cand_b": read_conllu(WORD_HEAP, "cand_b"),
}
docs = {
    doc_id: NormalizedDocument(
        doc_id, " ".join(" ".join(t.form for t in s.tokens) for s in p.sentences)
    )
    for doc_id, p in parses.items()
}
events = {doc_id: extract_events(p) for doc_id, p in parses.items()}

print("event keys per document:")
for doc_id, seq in events.items():
    print(f"  {doc_id:<7} {sorted(seq.keys())}")

# 1. word unigram BM25: candidate B wins on raw overlap
index = build_index([words_stream(docs[c]) for c in ("cand_a", "cand_b")])
word_ranking = rank(index, words_stream(docs["query"]).tokens, ["cand_a", "cand_b"], "query")
print("\nword BM25 ranking:     ", [(c, round(s, 4)) for c, s in word_ranking.entries])

# 2. jaccard over atomic events: only candidate A shares an event
for cand in ("cand_a", "cand_b"):
    score = jaccard_score(events["query"].keys(), events[cand].keys())
    print(f"event jaccard vs {cand}: {score:.4f}")

# 3. BM25 over atomic / flattened event tokens
for streamer, label in ((atomic_event_stream, "atomic"), (nonatomic_event_stream, "non-atomic")):
    idx = build_index([streamer(events[c]) for c in ("cand_a", "cand_b")])
    ranking = rank(idx, streamer(events["query"]).tokens, ["cand_a", "cand_b"], "query")
    print(f"{label:<10} event BM25:  ", [(c, round(s, 4)) for c, s in ranking.entries])

# 4. pair-filtered: each pair keeps only sentences behind shared events
config = RunConfig(variant="event_filtered", scorer="bm25", ngram_order=2).validate()
filtered = pairwise_filtered_rank(
    docs["query"], [docs["cand_a"], docs["cand_b"]], events, parses, config
)
print("event-filtered BM25:   ", [(c, round(s, 4)) for c, s in filtered.entries])
