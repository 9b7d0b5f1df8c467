import json
from pathlib import Path

import pytest

from priorcase import read_conllu

# Hand-checked parse of "These statements were forwarded to the Police":
# passive subject under the participle, object under the preposition.
FIG_SENTENCE_CONLLU = """\
1\tThese\tthese\tDET\t_\t_\t2\tdet\t_\t_
2\tstatements\tstatement\tNOUN\t_\t_\t4\tnsubjpass\t_\t_
3\twere\tbe\tAUX\t_\t_\t4\tauxpass\t_\t_
4\tforwarded\tforward\tVERB\t_\t_\t0\troot\t_\t_
5\tto\tto\tADP\t_\t_\t4\tprep\t_\t_
6\tthe\tthe\tDET\t_\t_\t7\tdet\t_\t_
7\tPolice\tpolice\tPROPN\t_\t_\t5\tpobj\t_\t_
"""


def conllu_sentence(rows):
    """Render (form, lemma, upos, head, deprel) tuples as one CoNLL-U block."""
    lines = [
        f"{i}\t{form}\t{lemma}\t{upos}\t_\t_\t{head}\t{rel}\t_\t_"
        for i, (form, lemma, upos, head, rel) in enumerate(rows, start=1)
    ]
    return "\n".join(lines) + "\n"


def parse_rows(doc_id, *sentences):
    """Build a validated ParsedDocument from row-tuple sentences."""
    return read_conllu("\n".join(conllu_sentence(s) for s in sentences), doc_id)


def write_corpus(root: Path, docs, splits, citations, candidates, parses=None, labels=None):
    """Write a corpus directory in the layout the loader expects."""
    (root / "documents").mkdir(parents=True, exist_ok=True)
    for doc_id, text in docs.items():
        (root / "documents" / f"{doc_id}.txt").write_text(text, encoding="utf-8")
    (root / "splits.json").write_text(json.dumps(splits), encoding="utf-8")
    (root / "citations.json").write_text(json.dumps(citations), encoding="utf-8")
    (root / "candidates.json").write_text(json.dumps(candidates), encoding="utf-8")
    if parses:
        (root / "parses").mkdir(exist_ok=True)
        for doc_id, conllu_text in parses.items():
            (root / "parses" / f"{doc_id}.conllu").write_text(conllu_text, encoding="utf-8")
    if labels:
        (root / "labels").mkdir(exist_ok=True)
        for doc_id, label_list in labels.items():
            (root / "labels" / f"{doc_id}.json").write_text(
                json.dumps({"labels": label_list}), encoding="utf-8"
            )
    return root


@pytest.fixture
def fig_doc():
    return read_conllu(FIG_SENTENCE_CONLLU, "fig")


@pytest.fixture
def minimal_corpus(tmp_path):
    """Three documents, one query citing one candidate."""
    return write_corpus(
        tmp_path / "corpus",
        docs={
            "q1": "The appellant relied on <CITATION> in the appeal.",
            "c1": "The court dismissed the appeal.",
            "c2": "The tribunal allowed the petition.",
        },
        splits={"train": [], "validation": [], "test": ["q1"]},
        citations={"q1": ["c1"]},
        candidates=["c1", "c2"],
    )
