#!/usr/bin/env python3
# The evaluation protocol: micro-averaged P/R/F1 at K, swept over K,
# with K chosen on validation and applied to test.

from priorcase import RankedList, evaluate_run, micro_metrics, sweep_k

POOL = [f"c{i}" for i in range(10)]


def ranking(query_id, *ordered):
    entries = tuple((c, float(len(ordered) - i)) for i, c in enumerate(ordered))
    return RankedList(query_id, entries)


# two validation queries: one ranks all four of its citations on top,
# the other buries one of its three
gold = {
    "v1": frozenset({"c0", "c1", "c2", "c3"}),
    "v2": frozenset({"c4", "c5", "c9"}),
    "t1": frozenset({"c0", "c1", "c2", "c3"}),
}
validation = [
    ranking("v1", "c0", "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9"),
    ranking("v2", "c4", "c5", "c0", "c1", "c2", "c3", "c6", "c7", "c8", "c9"),
]
test = [ranking("t1", "c0", "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9")]

print("micro metrics pool hit/retrieved/relevant counts over all queries,")
print("so large-gold queries weigh more than small-gold ones.\n")

print(f"{'K':>3} {'precision':>10} {'recall':>10} {'f1':>10}")
for point in sweep_k(validation, gold, list(range(1, 11))):
    print(f"{point.K:>3} {point.precision:>10.4f} {point.recall:>10.4f} {point.f1:>10.4f}")

report = evaluate_run({"validation": validation, "test": test}, gold, list(range(1, 11)))
print(f"\nselected K* on validation: {report.selected_K}")
print(
    f"test metrics at K*: P={report.test_point.precision:.4f} "
    f"R={report.test_point.recall:.4f} F1={report.test_point.f1:.4f}"
)

# the single-point convenience call, for ad-hoc checks
point = micro_metrics(test, gold, K=4)
print(f"test F1 at K=4 directly: {point.f1:.4f}")
