"""CoNLL-U reading, validation, and tree traversal.

Only the ID, FORM, LEMMA, UPOS, HEAD and DEPREL columns are consumed;
FEATS, XPOS, DEPS and MISC are ignored. Multiword-token ranges ("3-4")
and empty nodes ("3.1") are skipped. Every sentence is validated to be a
single-rooted tree before it is handed to the rest of the pipeline.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, Literal


class ConlluError(Exception):
    """Malformed CoNLL-U input; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class ParsedToken:
    index: int
    form: str
    lemma: str
    upos: str
    head: int
    deprel: str


@dataclass(frozen=True)
class ParsedSentence:
    tokens: tuple[ParsedToken, ...]
    sent_index: int

    def __len__(self) -> int:
        return len(self.tokens)

    def token(self, index: int) -> ParsedToken:
        """1-based lookup."""
        return self.tokens[index - 1]


@dataclass(frozen=True)
class ParsedDocument:
    doc_id: str
    sentences: tuple[ParsedSentence, ...]


def children(
    sentence: ParsedSentence, index: int, side: Literal["left", "right"]
) -> list[ParsedToken]:
    """Dependents of token ``index`` on one side, in ascending position."""
    if side == "left":
        return [t for t in sentence.tokens if t.head == index and t.index < index]
    if side == "right":
        return [t for t in sentence.tokens if t.head == index and t.index > index]
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def _validate(tokens: list[ParsedToken], start_line: int) -> None:
    n = len(tokens)
    roots = [t for t in tokens if t.head == 0]
    for t in tokens:
        if not 0 <= t.head <= n:
            raise ConlluError(
                f"head {t.head} out of range for sentence of {n} tokens", start_line
            )
    if len(roots) != 1:
        raise ConlluError(f"sentence has {len(roots)} roots, expected 1", start_line)
    heads = {t.index: t.head for t in tokens}
    for t in tokens:
        seen = {t.index}
        cur = t.head
        while cur != 0:
            if cur in seen:
                raise ConlluError(f"cycle through token {cur}", start_line)
            seen.add(cur)
            cur = heads[cur]


def read_conllu(stream: Iterable[str] | str, doc_id: str) -> ParsedDocument:
    """Parse a CoNLL-U character stream into a validated document.

    Raises :class:`ConlluError` with a line number on malformed column
    counts, bad head indices, self-loops, multiple roots, or cycles.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)

    sentences: list[ParsedSentence] = []
    tokens: list[ParsedToken] = []
    sentence_start = 1

    def flush(at_line: int) -> None:
        nonlocal tokens, sentence_start
        if tokens:
            _validate(tokens, sentence_start)
            sentences.append(
                ParsedSentence(tokens=tuple(tokens), sent_index=len(sentences))
            )
            tokens = []
        sentence_start = at_line + 1

    lineno = 0
    for lineno, line in enumerate(stream, start=1):
        line = line.rstrip("\n")
        if not line.strip():
            flush(lineno)
            continue
        if line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 10:
            raise ConlluError(f"expected 10 columns, found {len(fields)}", lineno)
        tok_id = fields[0]
        if "-" in tok_id or "." in tok_id:
            continue
        try:
            index = int(tok_id)
        except ValueError:
            raise ConlluError(f"non-numeric token id {tok_id!r}", lineno) from None
        try:
            head = int(fields[6])
        except ValueError:
            raise ConlluError(f"non-numeric head {fields[6]!r}", lineno) from None
        if head == index:
            raise ConlluError(f"token {index} is its own head", lineno)
        if index != len(tokens) + 1:
            raise ConlluError(
                f"token id {index} out of sequence (expected {len(tokens) + 1})", lineno
            )
        tokens.append(
            ParsedToken(
                index=index,
                form=fields[1],
                lemma=fields[2],
                upos=fields[3],
                head=head,
                deprel=fields[7],
            )
        )
    flush(lineno + 1)
    return ParsedDocument(doc_id=doc_id, sentences=tuple(sentences))


def to_conllu(doc: ParsedDocument) -> str:
    """Serialize the consumed columns back out; unconsumed columns become '_'."""
    blocks = []
    for sentence in doc.sentences:
        lines = [
            f"{t.index}\t{t.form}\t{t.lemma}\t{t.upos}\t_\t_\t{t.head}\t{t.deprel}\t_\t_"
            for t in sentence.tokens
        ]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")
