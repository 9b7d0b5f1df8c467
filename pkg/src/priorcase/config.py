"""Run configuration: a JSON file validated up front, echoed into outputs."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, asdict
from pathlib import Path

from .representations import VARIANTS

SCORERS = ("bm25", "tfidf_cosine", "jaccard")

DEFAULT_QUERY_LABELS = ("facts", "argument", "ratio")
DEFAULT_CANDIDATE_LABELS = ("facts", "argument", "ratio", "judgment")


class ConfigError(Exception):
    """Invalid run configuration."""


@dataclass
class RunConfig:
    name: str = "run"
    variant: str = "words"
    scorer: str = "bm25"
    ngram_order: int = 1
    cumulative: bool = True
    k1: float = 1.5
    b: float = 0.75
    k_range: list[int] = field(default_factory=lambda: list(range(1, 21)))
    strip_citation_sentences: bool = False
    keep_citation_marker: bool = False
    workers: int = 1
    query_keep_labels: list[str] = field(default_factory=lambda: list(DEFAULT_QUERY_LABELS))
    candidate_keep_labels: list[str] = field(
        default_factory=lambda: list(DEFAULT_CANDIDATE_LABELS)
    )
    parses_dir: str | None = None
    labels_dir: str | None = None
    events_cache: str | None = None
    out_dir: str | None = None

    def validate(self) -> "RunConfig":
        if self.variant not in VARIANTS:
            raise ConfigError(f"unknown variant {self.variant!r}; expected one of {VARIANTS}")
        if self.scorer not in SCORERS:
            raise ConfigError(f"unknown scorer {self.scorer!r}; expected one of {SCORERS}")
        if self.scorer == "jaccard" and self.variant != "atomic_events":
            raise ConfigError("the jaccard scorer requires variant = atomic_events")
        if self.ngram_order < 1:
            raise ConfigError(f"ngram_order must be >= 1, got {self.ngram_order}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        if not self.k_range or list(self.k_range) != sorted(set(self.k_range)):
            raise ConfigError("k_range must be non-empty and strictly ascending")
        if any(k < 1 for k in self.k_range):
            raise ConfigError("k_range values must be >= 1")
        return self

    def needs_events(self) -> bool:
        return self.variant in ("atomic_events", "nonatomic_events", "event_filtered")

    def needs_parses(self) -> bool:
        return (
            self.needs_events()
            or self.variant == "label_filtered"
            or self.strip_citation_sentences
        )

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {unknown}")
        return cls(**data).validate()

    @classmethod
    def from_json(cls, path: str | Path) -> "RunConfig":
        path = Path(path)
        if not path.is_file():
            raise ConfigError(f"missing config file: {path}")
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config is not valid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        return cls.from_dict(data)
