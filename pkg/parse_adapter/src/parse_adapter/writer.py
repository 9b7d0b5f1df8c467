"""CoNLL-U serialization with provenance, written atomically."""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from .pipeline import Word

PARSER_ID = "parse-adapter-rules/0.1.0"


def to_conllu(sentences: list[list[Word]], parser_id: str = PARSER_ID) -> str:
    """Ten-column CoNLL-U; unproduced columns are '_'. The parser identity
    travels with the data as a comment so parse drift is attributable."""
    lines = [f"# parser = {parser_id}"]
    for i, sentence in enumerate(sentences):
        lines.append(f"# sent_id = {i}")
        for w in sentence:
            lines.append(
                f"{w.index}\t{w.form}\t{w.lemma}\t{w.upos}\t_\t_\t{w.head}\t{w.deprel}\t_\t_"
            )
        lines.append("")
    return "\n".join(lines) + ("\n" if lines[-1] != "" else "")


def write_atomic(path: str | Path, content: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
