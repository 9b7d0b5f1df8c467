"""Command line entry points: ingest, extract-events, run, bench.

Exit codes: 0 success, 1 runtime failure, 2 validation or config failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import ConfigError, RunConfig
from .conllu import ConlluError, read_conllu
from .corpus import CorpusError, load_corpus
from .evaluation import benchmark
from .events import extract_events, parse_content_hash, read_events_jsonl, write_events_jsonl
from .pipeline import Pipeline, run_pipeline
from .representations import LabelAlignmentError

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_VALIDATION = 2

_USER_ERRORS = (CorpusError, ConfigError, ConlluError, LabelAlignmentError)


def _load_config(path: str | None) -> RunConfig:
    if path is None:
        return RunConfig().validate()
    return RunConfig.from_json(path)


def cmd_ingest(args) -> int:
    manifest, documents = load_corpus(args.corpus)
    doc_count = len(documents)
    query_count = len(manifest.query_ids)
    links = sum(len(v) for v in manifest.gold.values())
    sizes = [len(d.text.split()) for d in documents.values()]
    vocab = set()
    for d in documents.values():
        vocab.update(d.text.split())
    print(f"documents:                     {doc_count}")
    print(f"candidate documents:           {len(manifest.candidate_ids)}")
    print(f"query documents:               {query_count}")
    print(f"avg document size (tokens):    {sum(sizes) / doc_count:.2f}")
    print(f"vocab size:                    {len(vocab)}")
    print(f"total citation links:          {links}")
    print(f"avg citation links per query:  {links / query_count:.3f}" if query_count else
          "avg citation links per query:  n/a")
    for split, ids in manifest.splits.items():
        print(f"split {split:<12} {len(ids)} queries")
    return EXIT_OK


def cmd_extract_events(args) -> int:
    config = _load_config(args.config)
    root = Path(args.corpus)
    manifest, _ = load_corpus(root)
    parses_dir = Path(config.parses_dir) if config.parses_dir else root / "parses"
    out_dir = Path(args.out) if args.out else (
        Path(config.events_cache) if config.events_cache else root / "events"
    )
    all_ids = sorted(set(manifest.candidate_ids) | set(manifest.query_ids))
    missing = [doc_id for doc_id in all_ids if not (parses_dir / f"{doc_id}.conllu").is_file()]
    if missing:
        raise CorpusError(f"missing parse files for: {missing}")

    written = skipped = 0
    for doc_id in all_ids:
        raw = (parses_dir / f"{doc_id}.conllu").read_bytes()
        source_hash = parse_content_hash(raw)
        cache_path = out_dir / f"{doc_id}.jsonl"
        if read_events_jsonl(cache_path, source_hash) is not None:
            skipped += 1
            continue
        seq = extract_events(read_conllu(raw.decode("utf-8"), doc_id))
        write_events_jsonl(cache_path, seq, source_hash)
        written += 1
    print(f"extracted {written} documents, {skipped} fresh in cache ({out_dir})")
    return EXIT_OK


def cmd_run(args) -> int:
    config = RunConfig.from_json(args.config)
    out_dir = Path(args.out) if args.out else None
    _, summary = run_pipeline(config, args.corpus, out_dir)
    if "selected_k" in summary:
        tm = summary["test_metrics"]
        print(
            f"run '{config.name}': K*={summary['selected_k']} "
            f"test P={tm['precision']:.4f} R={tm['recall']:.4f} F1={tm['f1']:.4f}"
        )
    else:
        print(f"run '{config.name}': rankings written")
    return EXIT_OK


def cmd_bench(args) -> int:
    config = RunConfig.from_json(args.config)
    pipeline = Pipeline(config, args.corpus)
    pipeline.load_inputs()
    timing = benchmark(pipeline, single_worker=args.single_worker)
    rankings = pipeline.last_rankings
    out = Path(args.out) if args.out else Path(config.out_dir or f"runs/{config.name}")
    pipeline.write_outputs(rankings, out, timing=timing)
    print(json.dumps(timing.as_dict(), indent=2, sort_keys=True))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="priorcase",
        description="Unsupervised prior-case retrieval over event-based representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="validate a corpus directory and print statistics")
    p.add_argument("--corpus", required=True, help="corpus root directory")
    p.add_argument("--config", default=None, help="run config JSON (optional)")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("extract-events", help="extract events for every document into a cache")
    p.add_argument("--corpus", required=True)
    p.add_argument("--config", default=None)
    p.add_argument("--out", default=None, help="cache directory (default from config)")
    p.set_defaults(func=cmd_extract_events)

    p = sub.add_parser("run", help="rank all queries and write rankings + metrics")
    p.add_argument("--corpus", required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--out", default=None, help="output directory (default runs/<name>)")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("bench", help="run with stage-wise wall-clock timing")
    p.add_argument("--corpus", required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--out", default=None)
    p.add_argument(
        "--single-worker",
        action="store_true",
        help="force sequential scoring for timing fidelity",
    )
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
