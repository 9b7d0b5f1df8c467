"""parse-adapter: convert a directory of .txt documents into CoNLL-U parses."""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .entities import load_gazetteer, normalize_entities
from .pipeline import DEFAULT_MARKER, parse_text
from .writer import PARSER_ID, to_conllu, write_atomic

log = logging.getLogger("parse_adapter")


@dataclass
class AdapterConfig:
    input_dir: Path
    output_dir: Path
    gazetteer_path: Path | None = None
    normalize: bool = False
    batch_size: int = 64
    marker: str = DEFAULT_MARKER


def convert_file(path: Path, config: AdapterConfig, gazetteer) -> str:
    text = path.read_text(encoding="utf-8")
    if config.normalize:
        text = normalize_entities(text, gazetteer)
    sentences = parse_text(text, marker=config.marker)
    return to_conllu(sentences, PARSER_ID)


def parse_corpus(config: AdapterConfig) -> tuple[int, int]:
    """Convert every ``<id>.txt`` to ``<id>.conllu``; returns (written, failed).

    Unreadable inputs are skipped with a logged error. A gazetteer that
    fails to load is fatal: it is the model this pipeline runs on.
    """
    gazetteer = []
    if config.gazetteer_path is not None:
        gazetteer = load_gazetteer(config.gazetteer_path)

    inputs = sorted(config.input_dir.glob("*.txt"))
    written = failed = 0
    for i, path in enumerate(inputs, 1):
        try:
            conllu = convert_file(path, config, gazetteer)
        except OSError as exc:
            log.error("skipping unreadable input %s: %s", path, exc)
            failed += 1
            continue
        write_atomic(config.output_dir / f"{path.stem}.conllu", conllu)
        written += 1
        if config.batch_size and i % config.batch_size == 0:
            log.info("parsed %d/%d documents", i, len(inputs))
    return written, failed


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="parse-adapter",
        description="Sentence-split, tag, lemmatize and dependency-parse "
        "plain text into the CoNLL-U contract of the retrieval engine.",
    )
    parser.add_argument("--in", dest="input_dir", required=True, help="directory of <id>.txt files")
    parser.add_argument("--out", dest="output_dir", required=True, help="directory for <id>.conllu files")
    parser.add_argument("--gazetteer", default=None, help="entity list: Name<TAB>CLASS per line")
    parser.add_argument(
        "--normalize-entities",
        action="store_true",
        help="replace gazetteer mentions with per-document placeholder slots",
    )
    parser.add_argument("--batch-size", type=int, default=64)
    parser.add_argument("--marker", default=DEFAULT_MARKER, help="reserved citation token")
    args = parser.parse_args(argv)

    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    input_dir = Path(args.input_dir)
    if not input_dir.is_dir():
        print(f"error: input directory not found: {input_dir}", file=sys.stderr)
        return 2
    if args.normalize_entities and args.gazetteer is None:
        print("error: --normalize-entities requires --gazetteer", file=sys.stderr)
        return 2

    config = AdapterConfig(
        input_dir=input_dir,
        output_dir=Path(args.output_dir),
        gazetteer_path=Path(args.gazetteer) if args.gazetteer else None,
        normalize=args.normalize_entities,
        batch_size=args.batch_size,
        marker=args.marker,
    )
    try:
        written, failed = parse_corpus(config)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {written} parse files to {config.output_dir}" + (
        f" ({failed} inputs skipped)" if failed else ""
    ))
    return 0


if __name__ == "__main__":
    sys.exit(main())
