#!/usr/bin/env python3
# Stage-wise wall-clock comparison: word n-gram BM25 vs event-based
# scoring on a generated corpus where documents are long but carry few
# events. Event streams being a fraction of the word streams is exactly
# what makes event scoring cheap.

import json
import tempfile
from pathlib import Path

from priorcase import Pipeline, RunConfig, benchmark

TEMPLATE_TRIPLES = 6
FILLER_WORDS = 400


def event_sentence(i, j):
    s, v, o = f"party{i}x{j}", f"act{i}x{j}", f"relief{i}x{j}"
    rows = [
        ("the", "the", "DET", 2, "det"),
        (s, s, "NOUN", 3, "nsubj"),
        (v, v, "VERB", 0, "root"),
        ("the", "the", "DET", 5, "det"),
        (o, o, "NOUN", 3, "dobj"),
    ]
    return f"the {s} {v} the {o}", rows


def filler_sentence(i):
    words = [f"boiler{i}w{j % 40}" for j in range(FILLER_WORDS)]
    rows = [(words[0], words[0], "NOUN", 0, "root")]
    rows += [(w, w, "NOUN", 1, "dep") for w in words[1:]]
    return " ".join(words), rows


def write_doc(root, doc_id, sentences):
    text = " ".join(t for t, _ in sentences)
    blocks = []
    for _, rows in sentences:
        blocks.append(
            "\n".join(
                f"{k}\t{f}\t{l}\t{u}\t_\t_\t{h}\t{r}\t_\t_"
                for k, (f, l, u, h, r) in enumerate(rows, 1)
            )
            + "\n"
        )
    (root / "documents" / f"{doc_id}.txt").write_text(text)
    (root / "parses" / f"{doc_id}.conllu").write_text("\n".join(blocks))


with tempfile.TemporaryDirectory() as tmp:
    root = Path(tmp) / "corpus"
    (root / "documents").mkdir(parents=True)
    (root / "parses").mkdir()

    queries = [f"q{i}" for i in range(8)]
    candidates = [f"c{i}" for i in range(40)]
    for qi, qid in enumerate(queries):
        write_doc(root, qid, [event_sentence(qi, j) for j in range(TEMPLATE_TRIPLES)]
                  + [filler_sentence(qi)])
    for ci, cid in enumerate(candidates):
        owner = ci % len(queries)  # shares events with one query
        write_doc(root, cid, [event_sentence(owner, j) for j in range(3)]
                  + [filler_sentence(100 + ci)])

    (root / "splits.json").write_text(
        json.dumps({"train": queries[:5], "validation": queries[5:6], "test": queries[6:]})
    )
    (root / "citations.json").write_text(
        json.dumps({q: [c for ci, c in enumerate(candidates) if ci % len(queries) == qi]
                    for qi, q in enumerate(queries)})
    )
    (root / "candidates.json").write_text(json.dumps(candidates))

    for label, config in [
        ("word BM25 (bigram)", RunConfig(variant="words", scorer="bm25", ngram_order=2)),
        ("atomic-event BM25", RunConfig(variant="atomic_events", scorer="bm25")),
        ("event jaccard", RunConfig(variant="atomic_events", scorer="jaccard")),
    ]:
        pipeline = Pipeline(config, root)
        pipeline.load_inputs()
        timing = benchmark(pipeline, single_worker=True)
        stages = "  ".join(f"{k}={v * 1e3:.1f}ms" for k, v in sorted(timing.stages.items()))
        print(f"{label:<20} total={timing.total * 1e3:7.1f}ms  {stages}")
