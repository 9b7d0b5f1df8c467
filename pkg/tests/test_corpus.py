import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from priorcase import (
    CITATION_MARKER,
    CorpusError,
    load_corpus,
    normalize_text,
    strip_citation_sentences,
)
from conftest import parse_rows, write_corpus


class TestNormalizeText:
    def test_initials_and_honorific_removed(self):
        assert normalize_text("Dr. A. R. Lakshman ruled.") == "Lakshman ruled."

    def test_marker_preserved_verbatim(self):
        assert normalize_text("see <CITATION> at para 4") == "see <CITATION> at para 4"

    def test_short_forms_expanded(self):
        assert (
            normalize_text("addl. charges in case no. 5")
            == "additional charges in case number 5"
        )
        assert normalize_text("Nos. 4 and 5, govt. orders") == "numbers 4 and 5, government orders"

    def test_disallowed_characters_removed(self):
        assert normalize_text("the *court* (bench) said;") == "the court bench said;"

    def test_all_honorifics(self):
        out = normalize_text("Mr. Rao, Mrs. Rao, Ms. Devi, Hon. Judge, Prof. Sen, Smt. Bai, Shri Om")
        for h in ("Mr.", "Mrs.", "Ms.", "Hon.", "Prof.", "Smt."):
            assert h not in out
        # "Shri" without the dot is a plain word, not an abbreviation
        assert "Shri Om" in out

    def test_marker_at_edges(self):
        assert normalize_text("<CITATION> opens") == "<CITATION> opens"
        assert normalize_text("closes with <CITATION>") == "closes with <CITATION>"

    @given(st.text(max_size=300))
    @settings(max_examples=300, deadline=None)
    def test_idempotent(self, raw):
        once = normalize_text(raw)
        assert normalize_text(once) == once

    @given(st.integers(min_value=0, max_value=3), st.text(alphabet="abc <>.", max_size=60))
    @settings(max_examples=200, deadline=None)
    def test_marker_count_preserved(self, n, filler):
        raw = filler.join([CITATION_MARKER] * n) if n else filler
        assert normalize_text(raw).count(CITATION_MARKER) == raw.count(CITATION_MARKER)


class TestLoadCorpus:
    def test_minimal_corpus(self, minimal_corpus):
        manifest, documents = load_corpus(minimal_corpus)
        assert manifest.candidate_ids == frozenset({"c1", "c2"})
        assert manifest.gold == {"q1": frozenset({"c1"})}
        assert len(documents) == 3
        assert documents["q1"].is_query
        assert not documents["c1"].is_query
        assert CITATION_MARKER in documents["q1"].text

    def test_unknown_cited_id_is_listed(self, tmp_path):
        root = write_corpus(
            tmp_path,
            docs={"q1": "text", "c1": "text"},
            splits={"train": [], "validation": [], "test": ["q1"]},
            citations={"q1": ["X"]},
            candidates=["c1"],
        )
        with pytest.raises(CorpusError, match="X"):
            load_corpus(root)

    def test_missing_document_file_names_path(self, tmp_path):
        root = write_corpus(
            tmp_path,
            docs={"q1": "text"},
            splits={"train": [], "validation": [], "test": ["q1"]},
            citations={"q1": ["c1"]},
            candidates=["c1"],
        )
        with pytest.raises(CorpusError, match="c1.txt"):
            load_corpus(root)

    def test_missing_manifest_file_names_path(self, tmp_path):
        root = write_corpus(
            tmp_path,
            docs={"q1": "text"},
            splits={"train": [], "validation": [], "test": ["q1"]},
            citations={},
            candidates=[],
        )
        (root / "citations.json").unlink()
        with pytest.raises(CorpusError, match="citations.json"):
            load_corpus(root)

    def test_overlapping_splits_rejected(self, tmp_path):
        root = write_corpus(
            tmp_path,
            docs={"q1": "text", "c1": "text"},
            splits={"train": ["q1"], "validation": ["q1"], "test": []},
            citations={"q1": ["c1"]},
            candidates=["c1"],
        )
        with pytest.raises(CorpusError, match="disjoint"):
            load_corpus(root)

    def test_query_without_citations_entry_gets_empty_gold(self, tmp_path):
        root = write_corpus(
            tmp_path,
            docs={"q1": "text", "c1": "text"},
            splits={"train": [], "validation": [], "test": ["q1"]},
            citations={},
            candidates=["c1"],
        )
        manifest, _ = load_corpus(root)
        assert manifest.gold == {"q1": frozenset()}

    def test_deterministic(self, minimal_corpus):
        first = load_corpus(minimal_corpus)
        second = load_corpus(minimal_corpus)
        assert first == second


class TestStripCitationSentences:
    def _doc(self):
        s1 = [("The", "the", "DET", 2, "det"), ("court", "court", "NOUN", 0, "root")]
        s2 = [
            ("see", "see", "VERB", 0, "root"),
            (CITATION_MARKER, CITATION_MARKER, "X", 1, "dep"),
        ]
        s3 = [("Appeal", "appeal", "NOUN", 0, "root"), ("allowed", "allow", "VERB", 1, "dep")]
        return parse_rows("d", s1, s2, s3)

    def test_marked_sentence_removed(self):
        from priorcase import NormalizedDocument

        parsed = self._doc()
        doc = NormalizedDocument("d", "The court see <CITATION> Appeal allowed")
        new_doc, new_parsed = strip_citation_sentences(doc, parsed)
        assert len(new_parsed.sentences) == 2
        assert [s.sent_index for s in new_parsed.sentences] == [0, 1]
        assert new_doc.text == "The court Appeal allowed"
        assert CITATION_MARKER not in new_doc.text
        assert all(
            t.form != CITATION_MARKER for s in new_parsed.sentences for t in s.tokens
        )

    def test_no_marker_is_identity(self):
        from priorcase import NormalizedDocument

        s1 = [("The", "the", "DET", 2, "det"), ("court", "court", "NOUN", 0, "root")]
        parsed = parse_rows("d", s1)
        doc = NormalizedDocument("d", "The court")
        new_doc, new_parsed = strip_citation_sentences(doc, parsed)
        assert new_parsed == parsed
        assert new_doc.text == "The court"

    def test_every_sentence_marked_yields_empty_document(self):
        from priorcase import NormalizedDocument

        s = [(CITATION_MARKER, CITATION_MARKER, "X", 0, "root")]
        parsed = parse_rows("d", s, s)
        doc = NormalizedDocument("d", "<CITATION> <CITATION>")
        new_doc, new_parsed = strip_citation_sentences(doc, parsed)
        assert new_parsed.sentences == ()
        assert new_doc.text == ""
