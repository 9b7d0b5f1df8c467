"""Plain text to CoNLL-U dependency parses, deterministically."""

__version__ = "0.1.0"

from .cli import AdapterConfig, convert_file, parse_corpus
from .entities import load_gazetteer, normalize_entities
from .pipeline import parse_text, split_sentences, tokenize
from .writer import PARSER_ID, to_conllu

__all__ = [
    "AdapterConfig",
    "PARSER_ID",
    "convert_file",
    "load_gazetteer",
    "normalize_entities",
    "parse_corpus",
    "parse_text",
    "split_sentences",
    "to_conllu",
    "tokenize",
]
