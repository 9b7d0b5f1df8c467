"""Deterministic synthetic corpora with controlled event/word overlap.

Construction: every query carries a set of private subject-verb-object
sentences (each yielding exactly one event). Its gold candidates repeat
four of those sentences verbatim, so they share four event keys with the
query. Every other candidate instead receives the query's *words* as
verbless filler, repeated, so it looks lexically similar while sharing
zero events. Event-set ranking therefore separates gold perfectly while
word-frequency ranking is drawn to the distractors.
"""

from conftest import write_corpus

BOILERPLATE = [
    "court", "record", "annexure", "evidence", "counsel",
    "petition", "judgment", "order", "statute", "bench",
]

GOLD_PER_QUERY = 5
TRIPLES_PER_QUERY = 8
SHARED_PER_GOLD = 4


def _event_sentence(subj, verb, obj):
    rows = [
        ("the", "the", "DET", 2, "det"),
        (subj, subj, "NOUN", 3, "nsubj"),
        (verb, verb, "VERB", 0, "root"),
        ("the", "the", "DET", 5, "det"),
        (obj, obj, "NOUN", 3, "dobj"),
        (".", ".", "PUNCT", 3, "punct"),
    ]
    text = f"the {subj} {verb} the {obj} ."
    return text, rows


def _flat_sentence(words):
    rows = [(words[0], words[0], "NOUN", 0, "root")]
    rows += [(w, w, "NOUN", 1, "dep") for w in words[1:]]
    text = " ".join(words)
    return text, rows


def _render(sentences):
    """(text, conllu) for a document given (text, rows) sentences."""
    texts, blocks = [], []
    for text, rows in sentences:
        texts.append(text)
        lines = [
            f"{i}\t{form}\t{lemma}\t{upos}\t_\t_\t{head}\t{rel}\t_\t_"
            for i, (form, lemma, upos, head, rel) in enumerate(rows, start=1)
        ]
        blocks.append("\n".join(lines) + "\n")
    return " ".join(texts), "\n".join(blocks)


def query_triples(qi):
    return [
        (f"claimant{qi}x{k}", f"move{qi}x{k}", f"relief{qi}x{k}")
        for k in range(TRIPLES_PER_QUERY)
    ]


def generate_separation_corpus(root, n_queries=20, bag_repeats=2):
    """Write the corpus under ``root`` and return (query_ids, candidate_ids)."""
    query_ids = [f"q{i:03d}" for i in range(n_queries)]
    n_candidates = n_queries * GOLD_PER_QUERY
    candidate_ids = [f"c{i:03d}" for i in range(n_candidates)]

    docs, parses, citations = {}, {}, {}
    boiler = _flat_sentence(BOILERPLATE)

    for qi, qid in enumerate(query_ids):
        sentences = [boiler]
        sentences += [_event_sentence(*t) for t in query_triples(qi)]
        # verbless repetition of the query's own words: lengthens the word
        # stream (and its n-gram count) without adding a single event
        own_bag = [w for t in query_triples(qi) for w in t] * (bag_repeats * 4)
        sentences.append(_flat_sentence(own_bag))
        docs[qid], parses[qid] = _render(sentences)
        citations[qid] = [
            candidate_ids[qi * GOLD_PER_QUERY + g] for g in range(GOLD_PER_QUERY)
        ]

    for ci, cid in enumerate(candidate_ids):
        owner = ci // GOLD_PER_QUERY  # the query this candidate is gold for
        slot = ci % GOLD_PER_QUERY
        triples = query_triples(owner)
        sentences = [boiler]
        for j in range(SHARED_PER_GOLD):
            sentences.append(_event_sentence(*triples[(slot + j) % TRIPLES_PER_QUERY]))
        for j in range(2):
            sentences.append(
                _event_sentence(f"noise{ci}a{j}", f"noise{ci}b{j}", f"noise{ci}c{j}")
            )
        # Lexical bait: the words of every *other* query, with no event structure.
        for other in range(len(query_ids)):
            if other == owner:
                continue
            bag = [w for t in query_triples(other) for w in t] * bag_repeats
            sentences.append(_flat_sentence(bag))
        docs[cid], parses[cid] = _render(sentences)

    n_train = max(1, int(n_queries * 0.7))
    n_val = max(1, int(n_queries * 0.1))
    splits = {
        "train": query_ids[:n_train],
        "validation": query_ids[n_train : n_train + n_val],
        "test": query_ids[n_train + n_val :],
    }
    write_corpus(root, docs, splits, citations, candidate_ids, parses=parses)
    return query_ids, candidate_ids
