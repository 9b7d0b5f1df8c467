from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from priorcase import (
    CITATION_MARKER,
    EventSequence,
    Event,
    LabelAlignmentError,
    NormalizedDocument,
    SentenceLabels,
    atomic_event_stream,
    canonical_key,
    event_filtered_pair,
    extract_events,
    label_filtered_stream,
    ngrams,
    nonatomic_event_stream,
    words_stream,
)
from priorcase.representations import NGRAM_SEP, load_labels

from conftest import parse_rows
from event_fixtures import FIXTURES
from oracles import ngram_oracle


def doc(text, doc_id="d"):
    return NormalizedDocument(doc_id, text)


class TestWordsStream:
    def test_basic_tokenization(self):
        s = words_stream(doc("The Court dismissed the appeal."))
        assert list(s.tokens) == ["the", "court", "dismissed", "the", "appeal"]

    def test_single_character_tokens_dropped(self):
        assert words_stream(doc("a I x")).tokens == ()

    def test_marker_removed(self):
        s = words_stream(doc("see <CITATION> here"))
        assert list(s.tokens) == ["see", "here"]

    def test_marker_kept_when_configured(self):
        s = words_stream(doc("see <CITATION> here"), keep_citation_marker=True)
        assert list(s.tokens) == ["see", CITATION_MARKER, "here"]

    def test_digits_tokenized(self):
        assert list(words_stream(doc("section 41 of 1950")).tokens) == [
            "section", "41", "of", "1950",
        ]


class TestEventStreams:
    def _events(self):
        return extract_events(parse_rows("d", FIXTURES[0][1], FIXTURES[9][1]))

    def test_atomic_empty(self):
        assert atomic_event_stream(EventSequence("d", ())).tokens == ()

    def test_atomic_preserves_order_and_multiplicity(self):
        seq = self._events()
        s = atomic_event_stream(seq)
        assert len(s.tokens) == len(seq.events)
        assert list(s.tokens) == [canonical_key(e) for e in seq.events]
        doubled = EventSequence("d", seq.events + seq.events)
        assert (
            Counter(atomic_event_stream(doubled).tokens)
            == Counter({k: 2 * c for k, c in Counter(s.tokens).items()})
        )

    def test_nonatomic_flattens_slot_order(self):
        seq = EventSequence(
            "d", (Event(predicate="forward", subject="statement", pobj="police"),)
        )
        assert list(nonatomic_event_stream(seq).tokens) == ["statement", "forward", "police"]

    def test_nonatomic_splits_multiword_phrases(self):
        seq = EventSequence(
            "d", (Event(predicate="rule", subject="supreme court", dobj="appeal"),)
        )
        assert list(nonatomic_event_stream(seq).tokens) == [
            "supreme", "court", "rule", "appeal",
        ]

    def test_nonatomic_empty(self):
        assert nonatomic_event_stream(EventSequence("d", ())).tokens == ()


class TestEventFilteredPair:
    def _pair(self, q_sents, c_sents):
        qp = parse_rows("q", *q_sents)
        cp = parse_rows("c", *c_sents)
        qe, ce = extract_events(qp), extract_events(cp)
        qd = doc(" ".join(" ".join(t.form for t in s.tokens) for s in qp.sentences), "q")
        cd = doc(" ".join(" ".join(t.form for t in s.tokens) for s in cp.sentences), "c")
        return event_filtered_pair(qd, qe, cd, ce, qp, cp)

    def test_disjoint_events_give_empty_streams(self):
        qs, cs = self._pair([FIXTURES[0][1]], [FIXTURES[4][1]])
        assert qs.tokens == () and cs.tokens == ()

    def test_identical_docs_keep_full_word_stream(self):
        qs, cs = self._pair([FIXTURES[0][1]], [FIXTURES[0][1]])
        expected = ["these", "statements", "were", "forwarded", "to", "the", "police"]
        assert list(qs.tokens) == expected
        assert list(cs.tokens) == expected

    def test_selects_only_shared_event_sentences(self):
        # query: shared event in sentence 0 only; candidate: sentences 1 and 2
        shared = FIXTURES[0][1]
        other_q = FIXTURES[4][1]   # gave him notice (query-only)
        other_c = FIXTURES[6][1]   # appeared before the court (candidate-only)
        qs, cs = self._pair([shared, other_q], [other_c, shared, shared])
        q_words = ["these", "statements", "were", "forwarded", "to", "the", "police"]
        assert list(qs.tokens) == q_words
        assert list(cs.tokens) == q_words + q_words

    def test_symmetric_in_construction(self):
        q_sents = [FIXTURES[0][1], FIXTURES[4][1]]
        c_sents = [FIXTURES[0][1], FIXTURES[6][1]]
        qs, cs = self._pair(q_sents, c_sents)
        sq, sc = self._pair(c_sents, q_sents)
        assert qs.tokens == sc.tokens
        assert cs.tokens == sq.tokens

    def test_filtered_stream_is_submultiset_of_full_words(self):
        qs, cs = self._pair([FIXTURES[0][1], FIXTURES[4][1]], [FIXTURES[0][1]])
        qp = parse_rows("q", FIXTURES[0][1], FIXTURES[4][1])
        full = words_stream(
            doc(" ".join(" ".join(t.form for t in s.tokens) for s in qp.sentences), "q")
        )
        assert not Counter(qs.tokens) - Counter(full.tokens)


class TestLabelFiltered:
    def _parsed(self):
        return parse_rows("d", FIXTURES[0][1], FIXTURES[4][1], FIXTURES[6][1], FIXTURES[7][1])

    def test_keep_all_is_full_stream(self):
        parsed = self._parsed()
        labels = SentenceLabels("d", ("facts", "facts", "facts", "facts"))
        s = label_filtered_stream(doc("x"), parsed, labels, {"facts"})
        assert len(s.tokens) == sum(
            len(words_stream(doc(" ".join(t.form for t in sent.tokens))).tokens)
            for sent in parsed.sentences
        )

    def test_keep_empty_is_empty(self):
        labels = SentenceLabels("d", ("facts", "facts", "facts", "facts"))
        s = label_filtered_stream(doc("x"), self._parsed(), labels, set())
        assert s.tokens == ()

    def test_selects_labeled_sentences(self):
        labels = SentenceLabels("d", ("facts", "ruling", "ratio", "judgment"))
        s = label_filtered_stream(doc("x"), self._parsed(), labels, {"facts", "ratio"})
        q_words = ["these", "statements", "were", "forwarded", "to", "the", "police"]
        c_words = ["he", "appeared", "before", "the", "court", "of", "sessions"]
        assert list(s.tokens) == q_words + c_words

    def test_misaligned_labels_raise(self):
        labels = SentenceLabels("d", ("facts",))
        with pytest.raises(LabelAlignmentError, match="d"):
            label_filtered_stream(doc("x"), self._parsed(), labels, {"facts"})

    def test_load_labels(self, tmp_path):
        path = tmp_path / "d.json"
        path.write_text('{"labels": ["facts", "ratio"]}')
        assert load_labels(path, "d") == SentenceLabels("d", ("facts", "ratio"))


class TestNgrams:
    def test_exact_bigrams(self):
        assert ngrams(["a", "b", "c"], 2, cumulative=False) == [
            f"a{NGRAM_SEP}b", f"b{NGRAM_SEP}c",
        ]

    def test_cumulative_bigrams(self):
        assert ngrams(["a", "b", "c"], 2, cumulative=True) == [
            "a", "b", "c", f"a{NGRAM_SEP}b", f"b{NGRAM_SEP}c",
        ]

    def test_unigram_identity_both_modes(self):
        tokens = ["x", "y"]
        assert ngrams(tokens, 1, cumulative=False) == tokens
        assert ngrams(tokens, 1, cumulative=True) == tokens

    def test_order_below_one_rejected(self):
        with pytest.raises(ValueError):
            ngrams(["a"], 0)

    @given(st.lists(st.text(alphabet="ab", min_size=1, max_size=3), max_size=20),
           st.integers(min_value=1, max_value=6))
    @settings(max_examples=200, deadline=None)
    def test_exact_length_law_and_oracle(self, tokens, n):
        exact = ngrams(tokens, n, cumulative=False)
        assert len(exact) == max(0, len(tokens) - n + 1)
        assert exact == ngram_oracle(tokens, n, False)
        assert ngrams(tokens, n, cumulative=True) == ngram_oracle(tokens, n, True)
