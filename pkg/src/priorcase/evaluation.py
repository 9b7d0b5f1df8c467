"""Micro-averaged precision/recall/F1 at K, K selection, and timing.

Hit, retrieved, and relevant counts are summed over all queries before
the ratios are taken (micro averaging): a query with many citations
weighs more than one with few. K is chosen on the validation split by
best F1 (smallest K on ties) and test metrics are reported at that K.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .retrieval import RankedList


@dataclass(frozen=True)
class MetricsPoint:
    K: int
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class MetricsReport:
    split: str
    curve: tuple[MetricsPoint, ...]
    selected_K: int
    test_point: MetricsPoint


def f1_score(precision: float, recall: float) -> float:
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def metrics_point(K: int, precision: float, recall: float) -> MetricsPoint:
    return MetricsPoint(K=K, precision=precision, recall=recall, f1=f1_score(precision, recall))


def micro_metrics(
    rankings: Iterable[RankedList],
    gold: Mapping[str, frozenset[str] | set[str]],
    K: int,
) -> MetricsPoint:
    """Pooled precision/recall/F1 at cutoff K over all queries.

    Queries with fewer than K candidates contribute min(K, len(entries))
    to the retrieved count; queries with empty gold stay in the
    denominators. A query without a gold entry is an error.
    """
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    retrieved = correct = relevant = 0
    for ranking in rankings:
        if ranking.query_id not in gold:
            raise KeyError(f"no gold citations for query {ranking.query_id!r}")
        cited = gold[ranking.query_id]
        retrieved += min(K, len(ranking.entries))
        correct += sum(1 for cid in ranking.top(K) if cid in cited)
        relevant += len(cited)
    precision = correct / retrieved if retrieved else 0.0
    recall = correct / relevant if relevant else 0.0
    return metrics_point(K, precision, recall)


def sweep_k(
    rankings: Sequence[RankedList],
    gold: Mapping[str, frozenset[str] | set[str]],
    k_range: Sequence[int],
) -> list[MetricsPoint]:
    if not k_range or list(k_range) != sorted(set(k_range)):
        raise ValueError("K range must be non-empty and strictly ascending")
    rankings = list(rankings)
    return [micro_metrics(rankings, gold, k) for k in k_range]


def select_k(validation_curve: Sequence[MetricsPoint]) -> int:
    """The K with the best validation F1; ties go to the smallest K."""
    if not validation_curve:
        raise ValueError("cannot select K from an empty curve")
    best = max(validation_curve, key=lambda p: (p.f1, -p.K))
    return best.K


def evaluate_run(
    rankings_by_split: Mapping[str, Sequence[RankedList]],
    gold: Mapping[str, frozenset[str] | set[str]],
    k_range: Sequence[int],
) -> MetricsReport:
    """Select K on validation, report test metrics at the selected K."""
    for required in ("validation", "test"):
        if required not in rankings_by_split:
            raise ValueError(f"missing rankings for the {required!r} split")
    curve = sweep_k(rankings_by_split["validation"], gold, k_range)
    k_star = select_k(curve)
    test_point = micro_metrics(rankings_by_split["test"], gold, k_star)
    return MetricsReport(
        split="validation", curve=tuple(curve), selected_K=k_star, test_point=test_point
    )


def write_metrics_csv(path: str | Path, curves: Mapping[str, Sequence[MetricsPoint]]) -> None:
    """``split,K,precision,recall,f1`` rows at 6 decimal places."""
    lines = ["split,K,precision,recall,f1"]
    for split, curve in curves.items():
        for p in curve:
            lines.append(
                f"{split},{p.K},{p.precision:.6f},{p.recall:.6f},{p.f1:.6f}"
            )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


# --- wall-clock benchmarking -------------------------------------------------


@dataclass
class StageTimer:
    stages: dict[str, float] = field(default_factory=dict)

    @contextmanager
    def stage(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.stages[name] = self.stages.get(name, 0.0) + (time.perf_counter() - start)


@dataclass(frozen=True)
class TimingReport:
    stages: dict[str, float]
    total: float
    workers: int
    query_count: int

    def as_dict(self) -> dict:
        return {
            "stages": dict(self.stages),
            "total_seconds": self.total,
            "workers": self.workers,
            "query_count": self.query_count,
        }


def benchmark(run, single_worker: bool = True) -> TimingReport:
    """Time a prepared pipeline end to end, stage by stage.

    ``run`` must expose ``build(timer, use_cache=...)``, ``rank_all(timer,
    workers)``, and ``query_ids``; inputs are expected to be loaded
    already so corpus and parse-file I/O stays outside the clock.
    Single-worker mode forces strictly sequential scoring.
    """
    timer = StageTimer()
    workers = 1 if single_worker else run.config.workers
    start = time.perf_counter()
    run.build(timer=timer, use_cache=False)
    run.rank_all(timer=timer, workers=workers)
    total = time.perf_counter() - start
    return TimingReport(
        stages=dict(timer.stages),
        total=total,
        workers=workers,
        query_count=len(run.query_ids),
    )
