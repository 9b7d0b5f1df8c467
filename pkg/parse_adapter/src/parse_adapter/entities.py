"""Gazetteer-driven entity anonymization.

Names listed in a gazetteer are replaced by per-document placeholder
slots (PERSON1, PERSON2, ORG1, ...) assigned in order of first mention,
so the same name always maps to the same placeholder within a document
and reruns are byte-identical. Placeholders are purely alphanumeric so
they survive downstream text normalization and tokenization unchanged.
"""

from __future__ import annotations

import re
from pathlib import Path


def load_gazetteer(path: str | Path) -> list[tuple[str, str]]:
    """One entry per line: ``Name<TAB>CLASS``; blank lines and # comments skipped."""
    entries: list[tuple[str, str]] = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "\t" not in line:
            raise ValueError(f"gazetteer line {lineno}: expected 'Name<TAB>CLASS'")
        name, cls = line.split("\t", 1)
        name, cls = name.strip(), cls.strip().upper()
        if name and cls:
            entries.append((name, cls))
    return entries


def normalize_entities(text: str, gazetteer: list[tuple[str, str]]) -> str:
    """Replace gazetteer mentions with per-document placeholder slots.

    Longest names match first; matching is case-insensitive on word
    boundaries. An empty gazetteer returns the text unchanged.
    """
    if not gazetteer:
        return text
    ordered = sorted(gazetteer, key=lambda e: (-len(e[0]), e[0]))
    pattern = re.compile(
        r"\b(?:" + "|".join(re.escape(name) for name, _ in ordered) + r")\b",
        re.IGNORECASE,
    )
    classes = {name.lower(): cls for name, cls in ordered}
    slots: dict[str, str] = {}
    counters: dict[str, int] = {}

    def substitute(match: re.Match) -> str:
        key = match.group(0).lower()
        if key not in slots:
            cls = classes[key]
            counters[cls] = counters.get(cls, 0) + 1
            slots[key] = f"{cls}{counters[cls]}"
        return slots[key]

    return pattern.sub(substitute, text)
