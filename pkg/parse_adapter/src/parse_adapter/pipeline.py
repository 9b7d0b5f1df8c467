"""Deterministic rule-based parsing pipeline: text in, token arcs out.

The pipeline is a fixed cascade — sentence split, tokenize, tag,
lemmatize, attach — with no model state and no randomness, so the same
input bytes always produce the same parse. Tags and relations follow the
scheme the retrieval engine consumes (nsubj/nsubjpass, dobj, dative,
prep + pobj, conj, compound).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import lexicon

DEFAULT_MARKER = "<CITATION>"

_WORD = r"[A-Za-z][A-Za-z0-9]*(?:'[A-Za-z]+)?"
_NUMBER = r"[0-9]+(?:\.[0-9]+)?"

CHUNK_TAGS = {"DET", "ADJ", "NOUN", "PROPN", "NUM"}
NOMINAL_TAGS = {"NOUN", "PROPN", "NUM"}


@dataclass
class Word:
    index: int
    form: str
    lemma: str = "_"
    upos: str = "X"
    head: int = 0
    deprel: str = "dep"


def split_sentences(text: str, marker: str = DEFAULT_MARKER) -> list[str]:
    """Period/question/exclamation runs followed by whitespace and a
    capital, digit, or marker end a sentence; the marker never splits."""
    out: list[str] = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        if text.startswith(marker, i):
            i += len(marker)
            continue
        ch = text[i]
        if ch in ".?!":
            j = i + 1
            while j < n and text[j] in ".?!":
                j += 1
            k = j
            while k < n and text[k].isspace():
                k += 1
            if k >= n:
                break
            if k > j and (text[k].isupper() or text[k].isdigit() or text.startswith(marker, k)):
                out.append(text[start:j].strip())
                start = k
                i = k
                continue
            i = j
            continue
        i += 1
    tail = text[start:].strip()
    if tail:
        out.append(tail)
    return [s for s in out if s]


def tokenize(sentence: str, marker: str = DEFAULT_MARKER) -> list[str]:
    """Marker as one token; words, numbers, and single punctuation marks."""
    pattern = re.compile(
        rf"{re.escape(marker)}|{_WORD}|{_NUMBER}|[^\sA-Za-z0-9]"
    )
    return pattern.findall(sentence)


def _looks_like_participle(lower: str) -> bool:
    return lower.endswith("ed") or lower.endswith("en")


def _strip_inflection(lower: str, suffix: str) -> str:
    stem = lower[: -len(suffix)]
    if len(stem) >= 3 and stem[-1] == stem[-2] and stem[-1] not in "aeilosu":
        stem = stem[:-1]  # planned -> plan
    if stem in lexicon.VERB_LEMMAS:
        return stem
    if stem + "e" in lexicon.VERB_LEMMAS:
        return stem + "e"  # decided -> decide
    return lower[: -len(suffix)]


def _verb_stem(lower: str) -> str | None:
    """The base verb if ``lower`` inflects a known verb, else None."""
    if lower in lexicon.IRREGULAR_VERBS:
        return lexicon.IRREGULAR_VERBS[lower]
    if lower in lexicon.VERB_LEMMAS:
        return lower
    for suffix in ("ied", "ies", "ed", "ing", "es", "s"):
        if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
            if suffix in ("ied", "ies"):
                stem = lower[: -len(suffix)] + "y"
            else:
                stem = _strip_inflection(lower, suffix)
            if stem in lexicon.VERB_LEMMAS:
                return stem
    return None


def tag(tokens: list[str], marker: str = DEFAULT_MARKER) -> list[Word]:
    """Assign universal POS tags from the lexicon plus context rules."""
    words = [Word(index=i, form=form) for i, form in enumerate(tokens, start=1)]
    prev_meaningful: Word | None = None
    saw_verb = False
    for w in words:
        form = w.form
        lower = form.lower()
        if form == marker:
            w.upos = "X"
        elif re.fullmatch(_NUMBER, form):
            w.upos = "NUM"
        elif not re.fullmatch(_WORD, form):
            w.upos = "PUNCT"
        elif lower in lexicon.AUXILIARIES:
            w.upos = "AUX"
        elif lower in lexicon.DETERMINERS:
            w.upos = "DET"
        elif lower in lexicon.ADPOSITIONS:
            w.upos = "ADP"
        elif lower in lexicon.PRONOUNS:
            w.upos = "PRON"
        elif lower in lexicon.COORDINATORS:
            w.upos = "CCONJ"
        elif lower in lexicon.SUBORDINATORS:
            w.upos = "SCONJ"
        elif lower in lexicon.PARTICLES:
            w.upos = "PART"
        elif lower in lexicon.ADJECTIVES:
            w.upos = "ADJ"
        else:
            stem = _verb_stem(lower)
            after_aux = prev_meaningful is not None and prev_meaningful.upos == "AUX"
            after_nominal = prev_meaningful is not None and prev_meaningful.upos in (
                "NOUN", "PROPN", "PRON", "NUM",
            )
            after_verb = prev_meaningful is not None and prev_meaningful.upos == "VERB"
            if stem is not None:
                # known verb forms used nominally: right after a determiner
                # or adposition ("the order", "on appeal"), a bare base form
                # after a nominal once the clause already has its verb
                # ("gave him notice"), or an s-plural straight after a verb
                # ("filed appeals")
                if prev_meaningful is not None and prev_meaningful.upos in ("DET", "ADP"):
                    w.upos = "NOUN"
                elif stem == lower and saw_verb and after_nominal:
                    w.upos = "NOUN"
                elif lower.endswith("s") and stem != lower and after_verb:
                    w.upos = "NOUN"
                else:
                    w.upos = "VERB"
            elif after_aux and _looks_like_participle(lower):
                w.upos = "VERB"
            elif (
                lower.endswith("ed")
                and len(lower) > 4
                and not saw_verb
                and after_nominal
                and lower not in lexicon.NON_VERB_ED
            ):
                # unknown -ed word in predicate position ("it rained")
                w.upos = "VERB"
            elif lower.endswith("ly") and len(lower) > 4:
                w.upos = "ADV"
            elif form[0].isupper() and w.index > 1:
                w.upos = "PROPN"
            else:
                w.upos = "NOUN"
        if w.upos == "VERB":
            saw_verb = True
        if w.upos != "PUNCT":
            prev_meaningful = w
    return words


def lemmatize(words: list[Word]) -> None:
    for w in words:
        if w.upos == "X":
            w.lemma = w.form
            continue
        lower = w.form.lower()
        if w.upos == "VERB":
            w.lemma = _verb_stem(lower) or _fallback_verb_lemma(lower)
        elif w.upos in ("NOUN", "PROPN"):
            w.lemma = _noun_lemma(lower)
        elif w.upos == "AUX":
            w.lemma = lexicon.IRREGULAR_VERBS.get(lower, lower)
        elif w.upos == "PRON":
            w.lemma = lexicon.PRONOUN_LEMMAS.get(lower, lower)
        else:
            w.lemma = lower


def _fallback_verb_lemma(lower: str) -> str:
    for suffix in ("ied", "ed", "ing"):
        if lower.endswith(suffix) and len(lower) > len(suffix) + 2:
            if suffix == "ied":
                return lower[:-3] + "y"
            return _strip_inflection(lower, suffix)
    return lower


def _noun_lemma(lower: str) -> str:
    if lower in lexicon.IRREGULAR_NOUNS:
        return lexicon.IRREGULAR_NOUNS[lower]
    if lower.endswith("ies") and len(lower) > 4:
        return lower[:-3] + "y"
    if re.search(r"(ses|xes|zes|ches|shes)$", lower) and len(lower) > 4:
        return lower[:-2]
    if lower.endswith("s") and not lower.endswith("ss") and len(lower) > 3:
        return lower[:-1]
    return lower


def _chunks(words: list[Word]) -> list[list[Word]]:
    """Maximal determiner/adjective/nominal runs; pronouns stand alone."""
    chunks: list[list[Word]] = []
    current: list[Word] = []
    for w in words:
        if w.upos == "PRON":
            if current:
                chunks.append(current)
                current = []
            chunks.append([w])
        elif w.upos in CHUNK_TAGS:
            current.append(w)
        else:
            if current:
                chunks.append(current)
                current = []
    if current:
        chunks.append(current)
    return chunks


def _chunk_head(chunk: list[Word]) -> Word:
    nominals = [w for w in chunk if w.upos in NOMINAL_TAGS]
    return nominals[-1] if nominals else chunk[-1]


def _attach_chunk_internals(chunk: list[Word], head: Word) -> None:
    for w in chunk:
        if w is head:
            continue
        w.head = head.index
        if w.upos == "DET":
            w.deprel = "det"
        elif w.upos == "ADJ":
            w.deprel = "amod"
        elif w.upos == "NUM":
            w.deprel = "nummod"
        elif w.index < head.index:
            w.deprel = "compound"
        else:
            w.deprel = "dep"


def parse(words: list[Word]) -> None:
    """Assign heads and relations in place; always yields a single-rooted tree."""
    if not words:
        return
    verbs = [w for w in words if w.upos == "VERB"]
    chunks = _chunks(words)
    head_of = {id(c): _chunk_head(c) for c in chunks}

    if verbs:
        root = verbs[0]
    elif chunks:
        root = head_of[id(chunks[0])]
    else:
        root = next((w for w in words if w.upos != "PUNCT"), words[0])
    root.head = 0
    root.deprel = "root"

    for chunk in chunks:
        _attach_chunk_internals(chunk, head_of[id(chunk)])

    # coordination first: a conjoined chunk hangs off the previous chunk
    # and stops competing for subject/object slots
    for a, b in zip(chunks, chunks[1:]):
        between = [
            w for w in words
            if head_of[id(a)].index < w.index < b[0].index
            and w.upos not in CHUNK_TAGS and w.upos != "PRON"
        ]
        ha, hb = head_of[id(a)], head_of[id(b)]
        if (
            len(between) == 1
            and between[0].upos == "CCONJ"
            and hb.head == 0
            and hb is not root
            and ha is not hb
        ):
            between[0].head, between[0].deprel = ha.index, "cc"
            hb.head, hb.deprel = ha.index, "conj"

    def unattached(chunk) -> bool:
        h = head_of[id(chunk)]
        return h.head == 0 and h is not root

    passive: dict[int, bool] = {}
    for v in verbs:
        aux_run = []
        j = v.index - 2  # 0-based position of the token left of v
        while j >= 0 and words[j].upos in ("AUX", "ADV", "PART"):
            if words[j].upos == "AUX":
                aux_run.append(words[j])
            j -= 1
        v_lower = v.form.lower()
        is_passive = (
            _looks_like_participle(v_lower) or v_lower in lexicon.IRREGULAR_VERBS
        ) and any(a.form.lower() in lexicon.AUX_BE for a in aux_run)
        passive[v.index] = is_passive
        for a in aux_run:
            a.head = v.index
            a.deprel = "auxpass" if (is_passive and a.form.lower() in lexicon.AUX_BE) else "aux"

    if verbs:
        for v in verbs[1:]:
            v.head = root.index
            v.deprel = "dep"

        # subjects: the nearest unattached, unprepositioned chunk to the left
        for v in verbs:
            candidates = [
                c for c in chunks
                if head_of[id(c)].index < v.index
                and unattached(c)
                and not _preceded_by_adp(words, c)
            ]
            if candidates:
                subject = head_of[id(candidates[-1])]
                subject.head = v.index
                subject.deprel = "nsubjpass" if passive[v.index] else "nsubj"

        # objects: post-verb chunks governed by this verb; two adjacent
        # bare chunks make a dative + direct object pair
        for v in verbs:
            post = [
                c for c in chunks
                if head_of[id(c)].index > v.index
                and unattached(c)
                and _nearest_verb_before(verbs, head_of[id(c)].index) is v
                and not _preceded_by_adp(words, c)
            ]
            if len(post) >= 2 and post[1][0].index == post[0][-1].index + 1:
                first, second = head_of[id(post[0])], head_of[id(post[1])]
                first.head, first.deprel = v.index, "dative"
                second.head, second.deprel = v.index, "dobj"
                rest = post[2:]
            elif post:
                obj = head_of[id(post[0])]
                obj.head, obj.deprel = v.index, "dobj"
                rest = post[1:]
            else:
                rest = []
            for extra in rest:
                w = head_of[id(extra)]
                w.head, w.deprel = v.index, "dep"

    # adpositions attach to the nearest verb or attached nominal on their
    # left; the chunk that follows becomes their object
    for i, w in enumerate(words):
        if w.upos != "ADP":
            continue
        left_verb = [v for v in verbs if v.index < w.index]
        left_nominal = [
            x for x in words[:i]
            if x.upos in NOMINAL_TAGS and (x.head != 0 or x is root)
        ]
        if w is root:
            pass
        elif left_verb and (
            not left_nominal or left_verb[-1].index > left_nominal[-1].index
        ):
            w.head, w.deprel = left_verb[-1].index, "prep"
        elif left_nominal:
            w.head, w.deprel = left_nominal[-1].index, "prep"
        else:
            w.head, w.deprel = root.index, "prep"
        nxt = _next_chunk_head(words, chunks, head_of, w.index)
        if nxt is not None and nxt is not root and nxt.head == 0:
            nxt.head = w.index
            nxt.deprel = "pobj"

    # leftovers lean on the structure around them
    for w in words:
        if w.head != 0 or w is root:
            continue
        if w.upos == "ADV" and verbs:
            w.head = _nearest_verb_any(verbs, w.index).index
            w.deprel = "advmod"
        elif w.upos == "PART" and verbs:
            w.head = _nearest_verb_any(verbs, w.index).index
            w.deprel = "neg" if w.form.lower() == "not" else "dep"
        elif w.upos == "PUNCT":
            w.head = root.index
            w.deprel = "punct"
        else:
            w.head = root.index
            w.deprel = "dep"

    _repair(words, root)


def _preceded_by_adp(words: list[Word], chunk: list[Word]) -> bool:
    pos = chunk[0].index - 2
    while pos >= 0 and words[pos].upos == "PUNCT":
        pos -= 1
    return pos >= 0 and words[pos].upos == "ADP"


def _nearest_verb_before(verbs: list[Word], index: int) -> Word | None:
    before = [v for v in verbs if v.index < index]
    return before[-1] if before else None


def _nearest_verb_any(verbs: list[Word], index: int) -> Word:
    before = [v for v in verbs if v.index < index]
    return before[-1] if before else verbs[0]


def _next_chunk_head(words, chunks, head_of, index):
    for chunk in chunks:
        if chunk[0].index > index:
            start = chunk[0].index
            if all(w.upos == "PUNCT" for w in words[index : start - 1]):
                return head_of[id(chunk)]
            return None
    return None


def _repair(words: list[Word], root: Word) -> None:
    """Guarantee the single-root acyclic contract whatever the rules did."""
    for w in words:
        if w is not root and (w.head == 0 or w.head == w.index):
            w.head = root.index
            if w.deprel == "root":
                w.deprel = "dep"
    by_index = {w.index: w for w in words}
    for w in words:
        seen = {w.index}
        cur = w.head
        while cur != 0:
            if cur in seen:
                w.head = root.index
                w.deprel = "dep"
                break
            seen.add(cur)
            cur = by_index[cur].head


def parse_text(text: str, marker: str = DEFAULT_MARKER) -> list[list[Word]]:
    """Full cascade over a document; returns one Word list per sentence."""
    sentences = []
    for sentence in split_sentences(text, marker):
        tokens = tokenize(sentence, marker)
        if not tokens:
            continue
        words = tag(tokens, marker)
        lemmatize(words)
        parse(words)
        sentences.append(words)
    return sentences
