"""Predicate-argument event extraction from dependency parses.

Every VERB token spawns candidate events: subjects are gathered from its
left dependents (nsubj, nsubjpass, csubj), objects from its right
dependents (dobj, pobj, dative, and pobj one level below a prep).
Conjunct dependents of an argument contribute alternative arguments;
compound dependents merge into a multiword phrase. One event is emitted
per combination of subject and object choices, and events with no
arguments at all are discarded.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, asdict
from pathlib import Path
from typing import Literal, Mapping

from .conllu import ParsedDocument, ParsedSentence, ParsedToken

SUBJECT_DEPS = frozenset({"nsubj", "nsubjpass", "csubj"})
OBJECT_DEPS = frozenset({"dobj", "pobj", "dative"})

# Pathological coordination must not blow up the Cartesian expansion.
MAX_EVENTS_PER_VERB = 16


@dataclass(frozen=True)
class Event:
    predicate: str
    subject: str | None = None
    dobj: str | None = None
    dative: str | None = None
    pobj: str | None = None
    sent_index: int = 0
    verb_index: int = 0


@dataclass(frozen=True)
class EventSequence:
    doc_id: str
    events: tuple[Event, ...]

    def keys(self) -> set[str]:
        return {canonical_key(e) for e in self.events}


def canonical_key(e: Event) -> str:
    """Position-free identity of an event: ``subject|predicate|dobj|dative|pobj``."""
    return "|".join(
        s or "" for s in (e.subject, e.predicate, e.dobj, e.dative, e.pobj)
    )


def _lemma(token: ParsedToken) -> str:
    base = token.lemma if token.lemma not in ("", "_") else token.form
    return base.lower()


class _SentenceView:
    """Child index over one sentence; deprels are matched case-insensitively."""

    def __init__(self, sentence: ParsedSentence, deprel_map: Mapping[str, str] | None):
        self.sentence = sentence
        self.kids: dict[int, list[ParsedToken]] = {}
        deprel_map = deprel_map or {}
        self.rel: dict[int, str] = {}
        for t in sentence.tokens:
            self.kids.setdefault(t.head, []).append(t)
            rel = t.deprel.lower()
            self.rel[t.index] = deprel_map.get(rel, rel)

    def side(self, index: int, side: str) -> list[ParsedToken]:
        kids = self.kids.get(index, ())
        if side == "left":
            return [t for t in kids if t.index < index]
        return [t for t in kids if t.index > index]

    def phrase(self, token: ParsedToken) -> str:
        compounds = [t for t in self.kids.get(token.index, ()) if self.rel[t.index] == "compound"]
        parts = sorted(compounds + [token], key=lambda t: t.index)
        return " ".join(_lemma(t) for t in parts)

    def with_conjuncts(self, token: ParsedToken) -> list[tuple[int, str]]:
        """(anchor position, phrase) for the argument and its conjuncts."""
        found = [(token.index, self.phrase(token))]
        for t in self.kids.get(token.index, ()):
            if self.rel[t.index] == "conj":
                found.append((t.index, self.phrase(t)))
        return found


def _gather(view: _SentenceView, verb_index: int) -> dict[str, list[tuple[int, str]]]:
    roles: dict[str, list[tuple[int, str]]] = {
        "subject": [], "dobj": [], "dative": [], "pobj": []
    }
    for t in view.side(verb_index, "left"):
        if view.rel[t.index] in SUBJECT_DEPS:
            roles["subject"].extend(view.with_conjuncts(t))
    for t in view.side(verb_index, "right"):
        rel = view.rel[t.index]
        if rel in OBJECT_DEPS:
            roles[rel].extend(view.with_conjuncts(t))
        elif rel == "prep":
            # One level only: chained prepositions are not followed.
            for inner in view.kids.get(t.index, ()):
                if view.rel[inner.index] == "pobj":
                    roles["pobj"].extend(view.with_conjuncts(inner))
    return roles


def collect_arguments(
    sentence: ParsedSentence,
    verb_index: int,
    side: Literal["left", "right"],
    deprel_map: Mapping[str, str] | None = None,
) -> list[str]:
    """Role-qualified argument phrases on one side of a verb, in token order."""
    view = _SentenceView(sentence, deprel_map)
    roles = _gather(view, verb_index)
    if side == "left":
        found = roles["subject"]
    else:
        found = roles["dobj"] + roles["dative"] + roles["pobj"]
    return [phrase for _, phrase in sorted(found)]


def _expand(
    predicate: str,
    roles: dict[str, list[tuple[int, str]]],
    sent_index: int,
    verb_index: int,
    cap: int,
) -> list[Event]:
    subjects = [p for _, p in roles["subject"]] or [None]
    dobjs = [p for _, p in roles["dobj"]] or [None]
    datives = [p for _, p in roles["dative"]] or [None]
    pobjs = [p for _, p in roles["pobj"]] or [None]
    out: list[Event] = []
    for s in subjects:
        for d in dobjs:
            for a in datives:
                for p in pobjs:
                    if s is None and d is None and a is None and p is None:
                        continue
                    out.append(
                        Event(
                            predicate=predicate,
                            subject=s,
                            dobj=d,
                            dative=a,
                            pobj=p,
                            sent_index=sent_index,
                            verb_index=verb_index,
                        )
                    )
                    if len(out) >= cap:
                        return out
    return out


def extract_events(
    doc: ParsedDocument,
    deprel_map: Mapping[str, str] | None = None,
    max_events_per_verb: int = MAX_EVENTS_PER_VERB,
) -> EventSequence:
    """Extract the ordered event list of a document.

    ``deprel_map`` optionally maps foreign label schemes onto the expected
    one (e.g. ``{"obj": "dobj"}``); matching is case-insensitive either way.
    """
    events: list[Event] = []
    for sentence in doc.sentences:
        view = _SentenceView(sentence, deprel_map)
        for token in sentence.tokens:
            if token.upos.upper() != "VERB":
                continue
            predicate = _lemma(token)
            if not predicate:
                continue
            roles = _gather(view, token.index)
            events.extend(
                _expand(
                    predicate, roles, sentence.sent_index, token.index, max_events_per_verb
                )
            )
    return EventSequence(doc_id=doc.doc_id, events=tuple(events))


# --- event cache -----------------------------------------------------------
#
# events/<doc_id>.jsonl: a header line carrying the content hash of the
# source parse file, then one JSON object per event. A stale or corrupt
# cache reads back as None so callers re-extract.


def parse_content_hash(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def write_events_jsonl(path: str | Path, seq: EventSequence, source_hash: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [json.dumps({"doc_id": seq.doc_id, "source_hash": source_hash})]
    lines.extend(json.dumps(asdict(e), sort_keys=True) for e in seq.events)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_events_jsonl(path: str | Path, expected_hash: str) -> EventSequence | None:
    path = Path(path)
    if not path.is_file():
        return None
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
        header = json.loads(lines[0])
        if header.get("source_hash") != expected_hash:
            return None
        events = tuple(Event(**json.loads(line)) for line in lines[1:] if line)
    except (json.JSONDecodeError, TypeError, KeyError, IndexError):
        return None
    return EventSequence(doc_id=header["doc_id"], events=events)
