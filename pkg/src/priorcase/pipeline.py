"""End-to-end orchestration: ingest, represent, rank, evaluate, persist.

The pipeline is deliberately split so that disk I/O happens in
``load_inputs`` while ``build`` and ``rank_all`` do pure in-memory work;
benchmarks clock only the latter two. Rankings are byte-reproducible:
no randomness anywhere, query order fixed by the splits file, ties broken
by candidate id, and worker count never affects results.
"""

from __future__ import annotations

import concurrent.futures
import datetime
import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .config import RunConfig
from .conllu import ParsedDocument, read_conllu
from .corpus import CorpusError, CorpusManifest, NormalizedDocument, load_corpus, strip_citation_sentences
from .evaluation import StageTimer, micro_metrics, select_k, sweep_k, write_metrics_csv
from .events import (
    EventSequence,
    extract_events,
    parse_content_hash,
    read_events_jsonl,
    write_events_jsonl,
)
from .representations import (
    atomic_event_stream,
    label_filtered_stream,
    load_labels,
    ngrams,
    nonatomic_event_stream,
    words_stream,
    TokenStream,
)
from .retrieval import (
    Bm25Index,
    RankedList,
    build_index,
    jaccard_rank,
    pairwise_filtered_rank,
    rank,
)

SPLIT_ORDER = ("train", "validation", "test")


@dataclass(frozen=True)
class RunManifest:
    """Everything needed to attribute and reproduce a run.

    Identical input hashes plus an identical config echo reproduce
    rankings.jsonl byte for byte; timestamps and timing are informational.
    """

    name: str
    config: dict
    input_hashes: dict[str, str]
    tool_version: str
    created_at: str
    corpus_root: str
    query_counts: dict[str, int] = field(default_factory=dict)
    selected_k: int | None = None
    test_metrics: dict | None = None
    timing: dict | None = None

    def as_dict(self) -> dict:
        out = {
            "name": self.name,
            "config": self.config,
            "input_hashes": self.input_hashes,
            "tool_version": self.tool_version,
            "created_at": self.created_at,
            "corpus_root": self.corpus_root,
            "query_counts": self.query_counts,
        }
        if self.selected_k is not None:
            out["selected_k"] = self.selected_k
            out["test_metrics"] = self.test_metrics
        if self.timing is not None:
            out["timing"] = self.timing
        return out


def _hash_tree(paths: list[Path]) -> str:
    digest = hashlib.sha256()
    for path in sorted(paths):
        digest.update(path.name.encode("utf-8"))
        digest.update(path.read_bytes())
    return digest.hexdigest()


class Pipeline:
    """One configured retrieval run over one corpus."""

    def __init__(self, config: RunConfig, corpus_root: str | Path):
        self.config = config.validate()
        self.root = Path(corpus_root)
        self.parses_dir = Path(config.parses_dir) if config.parses_dir else self.root / "parses"
        self.labels_dir = Path(config.labels_dir) if config.labels_dir else self.root / "labels"
        self.events_cache = Path(config.events_cache) if config.events_cache else None
        self.manifest: CorpusManifest | None = None
        self.documents: dict[str, NormalizedDocument] = {}
        self.parses: dict[str, ParsedDocument] = {}
        self.parse_bytes: dict[str, bytes] = {}
        self.labels = {}
        self.events: dict[str, EventSequence] = {}
        self.streams: dict[str, TokenStream] = {}
        self.query_streams: dict[str, TokenStream] = {}
        self.index: Bm25Index | None = None
        self.key_sets: dict[str, set[str]] = {}
        self.last_rankings: dict[str, RankedList] = {}

    # -- input loading (untimed disk I/O) ------------------------------------

    @property
    def query_ids(self) -> list[str]:
        assert self.manifest is not None
        return self.manifest.query_ids

    @property
    def all_ids(self) -> list[str]:
        assert self.manifest is not None
        return sorted(set(self.manifest.candidate_ids) | set(self.query_ids))

    def load_inputs(self) -> "Pipeline":
        self.manifest, self.documents = load_corpus(self.root)
        if self.config.needs_parses():
            missing = []
            for doc_id in self.all_ids:
                path = self.parses_dir / f"{doc_id}.conllu"
                if not path.is_file():
                    missing.append(doc_id)
                    continue
                raw = path.read_bytes()
                self.parse_bytes[doc_id] = raw
                self.parses[doc_id] = read_conllu(raw.decode("utf-8"), doc_id)
            if missing:
                raise CorpusError(f"missing parse files for: {missing}")
        if self.config.variant == "label_filtered":
            missing = []
            for doc_id in self.all_ids:
                path = self.labels_dir / f"{doc_id}.json"
                if not path.is_file():
                    missing.append(doc_id)
                    continue
                self.labels[doc_id] = load_labels(path, doc_id)
            if missing:
                raise CorpusError(f"missing label files for: {missing}")
        return self

    # -- in-memory stages (timed) ---------------------------------------------

    def _load_or_extract_events(self, doc_id: str, use_cache: bool) -> EventSequence:
        if self.events_cache is not None and use_cache:
            source_hash = parse_content_hash(self.parse_bytes[doc_id])
            cache_path = self.events_cache / f"{doc_id}.jsonl"
            cached = read_events_jsonl(cache_path, source_hash)
            if cached is not None:
                return cached
            seq = extract_events(self.parses[doc_id])
            write_events_jsonl(cache_path, seq, source_hash)
            return seq
        return extract_events(self.parses[doc_id])

    def build(self, timer: StageTimer | None = None, use_cache: bool = True) -> "Pipeline":
        """Event extraction, representation build, and index build."""
        timer = timer or StageTimer()
        cfg = self.config
        assert self.manifest is not None, "call load_inputs() first"

        if cfg.strip_citation_sentences:
            with timer.stage("representation"):
                for doc_id in self.all_ids:
                    doc, parsed = strip_citation_sentences(
                        self.documents[doc_id], self.parses[doc_id]
                    )
                    self.documents[doc_id] = doc
                    self.parses[doc_id] = parsed

        if cfg.needs_events():
            with timer.stage("event_extraction"):
                for doc_id in self.all_ids:
                    self.events[doc_id] = self._load_or_extract_events(doc_id, use_cache)

        with timer.stage("representation"):
            self._build_streams()

        with timer.stage("index_build"):
            self._build_scoring_structures()
        return self

    def _expanded(self, stream: TokenStream) -> TokenStream:
        cfg = self.config
        if cfg.ngram_order == 1:
            return stream
        return TokenStream(
            doc_id=stream.doc_id,
            variant=stream.variant,
            tokens=tuple(ngrams(stream.tokens, cfg.ngram_order, cfg.cumulative)),
        )

    def _build_streams(self) -> None:
        cfg = self.config
        keep = cfg.keep_citation_marker
        candidate_ids = sorted(self.manifest.candidate_ids)
        query_ids = self.query_ids
        if cfg.variant == "words":
            for doc_id in self.all_ids:
                self.streams[doc_id] = self._expanded(
                    words_stream(self.documents[doc_id], keep)
                )
        elif cfg.variant == "atomic_events":
            for doc_id in self.all_ids:
                self.streams[doc_id] = self._expanded(atomic_event_stream(self.events[doc_id]))
        elif cfg.variant == "nonatomic_events":
            for doc_id in self.all_ids:
                self.streams[doc_id] = self._expanded(
                    nonatomic_event_stream(self.events[doc_id])
                )
        elif cfg.variant == "label_filtered":
            for doc_id in candidate_ids:
                self.streams[doc_id] = self._expanded(
                    label_filtered_stream(
                        self.documents[doc_id],
                        self.parses[doc_id],
                        self.labels[doc_id],
                        cfg.candidate_keep_labels,
                        keep,
                    )
                )
            for doc_id in query_ids:
                self.query_streams[doc_id] = self._expanded(
                    label_filtered_stream(
                        self.documents[doc_id],
                        self.parses[doc_id],
                        self.labels[doc_id],
                        cfg.query_keep_labels,
                        keep,
                    )
                )
        # event_filtered builds its streams per pair at scoring time

    def _build_scoring_structures(self) -> None:
        cfg = self.config
        if cfg.variant == "event_filtered":
            return
        if cfg.scorer == "jaccard":
            for doc_id in self.all_ids:
                self.key_sets[doc_id] = set(self.streams[doc_id].tokens)
            return
        candidate_ids = sorted(self.manifest.candidate_ids)
        self.index = build_index(
            [self.streams[cid] for cid in candidate_ids], k1=cfg.k1, b=cfg.b
        )

    # -- scoring (timed) --------------------------------------------------------

    def _query_tokens(self, query_id: str) -> tuple[str, ...]:
        if self.config.variant == "label_filtered":
            return self.query_streams[query_id].tokens
        return self.streams[query_id].tokens

    def rank_query(self, query_id: str) -> RankedList:
        cfg = self.config
        pool = sorted(self.manifest.candidate_ids)
        if cfg.variant == "event_filtered":
            return pairwise_filtered_rank(
                self.documents[query_id],
                [self.documents[cid] for cid in pool],
                self.events,
                self.parses,
                cfg,
            )
        if cfg.scorer == "jaccard":
            return jaccard_rank(self.key_sets[query_id], self.key_sets, pool, query_id)
        return rank(self.index, self._query_tokens(query_id), pool, query_id, cfg.scorer)

    def rank_all(
        self, timer: StageTimer | None = None, workers: int | None = None
    ) -> dict[str, RankedList]:
        timer = timer or StageTimer()
        workers = workers or self.config.workers
        query_ids = self.query_ids
        with timer.stage("scoring"):
            if workers <= 1:
                results = [self.rank_query(qid) for qid in query_ids]
            else:
                with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
                    results = list(pool.map(self.rank_query, query_ids))
        self.last_rankings = {r.query_id: r for r in results}
        return self.last_rankings

    # -- outputs -----------------------------------------------------------------

    def rankings_by_split(self, rankings: dict[str, RankedList]) -> dict[str, list[RankedList]]:
        return {
            split: [rankings[qid] for qid in self.manifest.splits[split]]
            for split in SPLIT_ORDER
            if self.manifest.splits[split]
        }

    def input_hashes(self) -> dict[str, str]:
        hashes = {
            "corpus": _hash_tree(
                sorted((self.root / "documents").glob("*.txt"))
                + [self.root / n for n in ("splits.json", "citations.json", "candidates.json")]
            )
        }
        if self.config.needs_parses():
            hashes["parses"] = _hash_tree(sorted(self.parses_dir.glob("*.conllu")))
        if self.config.variant == "label_filtered":
            hashes["labels"] = _hash_tree(sorted(self.labels_dir.glob("*.json")))
        return hashes

    def write_outputs(
        self,
        rankings: dict[str, RankedList],
        out_dir: str | Path,
        timing=None,
    ) -> dict:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)

        lines = []
        for qid in self.query_ids:
            ranking = rankings[qid]
            lines.append(
                json.dumps(
                    {"query": qid, "ranking": [[cid, score] for cid, score in ranking.entries]},
                    separators=(",", ":"),
                )
            )
        (out / "rankings.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")

        by_split = self.rankings_by_split(rankings)
        gold = self.manifest.gold
        curves = {
            split: sweep_k(split_rankings, gold, self.config.k_range)
            for split, split_rankings in by_split.items()
        }
        write_metrics_csv(out / "metrics.csv", curves)

        selected_k = None
        test_metrics = None
        if "validation" in curves and "test" in by_split:
            selected_k = select_k(curves["validation"])
            test_point = micro_metrics(by_split["test"], gold, selected_k)
            test_metrics = {
                "K": test_point.K,
                "precision": test_point.precision,
                "recall": test_point.recall,
                "f1": test_point.f1,
            }
        manifest = RunManifest(
            name=self.config.name,
            config=self.config.to_dict(),
            input_hashes=self.input_hashes(),
            tool_version=__version__,
            created_at=datetime.datetime.now(datetime.timezone.utc).isoformat(),
            corpus_root=str(self.root.resolve()),
            query_counts={s: len(r) for s, r in by_split.items()},
            selected_k=selected_k,
            test_metrics=test_metrics,
            timing=timing.as_dict() if timing is not None else None,
        )
        summary = manifest.as_dict()
        (out / "summary.json").write_text(
            json.dumps(summary, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        return summary


def run_pipeline(config: RunConfig, corpus_root: str | Path, out_dir: str | Path | None = None):
    """Load, build, rank, evaluate, and persist one run. Returns (pipeline, summary)."""
    pipeline = Pipeline(config, corpus_root)
    pipeline.load_inputs()
    pipeline.build()
    rankings = pipeline.rank_all()
    out = Path(out_dir) if out_dir else Path(config.out_dir or f"runs/{config.name}")
    summary = pipeline.write_outputs(rankings, out)
    return pipeline, summary
