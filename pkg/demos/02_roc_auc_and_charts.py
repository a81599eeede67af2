#!/usr/bin/env python3
"""Exact AUC two ways, tied scores, and SVG chart output.

AUC is computed by two routes that must agree on every input: direct
positive/negative pair counting, and the rank-sum statistic with midranks
for ties. Both are exact rationals, so "agree" means equal, not close.
Charts for the bundled example land in demos/output/.
"""

from pathlib import Path

from gainslift import (ChartKind, ChartSpec, ScoredRecord, auc_pairs,
                       auc_wilcoxon, decile_series, example24_records,
                       gains_series, lift_series, rank_records, render_chart,
                       render_decimal, render_exact, roc_points)

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

ranked = rank_records(example24_records())
print("bundled example set:")
print(f"  auc by pair counting : {render_exact(auc_pairs(ranked))} "
      f"= {render_decimal(auc_pairs(ranked))}")
print(f"  auc by rank sums     : {render_exact(auc_wilcoxon(ranked))} "
      f"= {render_decimal(auc_wilcoxon(ranked))}")

print("\ntied scores count half per crossed pair; midranks do the same job:")
tied = rank_records([
    ScoredRecord("a", 0.9, 1), ScoredRecord("b", 0.5, 1),
    ScoredRecord("c", 0.5, 0), ScoredRecord("d", 0.5, 0),
    ScoredRecord("e", 0.2, 1), ScoredRecord("f", 0.1, 0),
])
print(f"  pair counting: {render_exact(auc_pairs(tied))}")
print(f"  rank sums    : {render_exact(auc_wilcoxon(tied))}")

print("\nROC points step once per distinct score (tie groups move together):")
for x, y in roc_points(tied).points:
    print(f"  fpr={render_decimal(x)}  tpr={render_decimal(y)}")

charts = [
    (ChartKind.GAINS_COUNT, gains_series(ranked), "gains_count.svg"),
    (ChartKind.GAINS_FRACTION, gains_series(ranked, fraction=True),
     "gains_fraction.svg"),
    (ChartKind.LIFT, lift_series(ranked), "lift.svg"),
    (ChartKind.DECILE_LIFT, decile_series(ranked), "decile_lift.svg"),
    (ChartKind.ROC, roc_points(ranked), "roc.svg"),
]
print()
for kind, series, filename in charts:
    spec = ChartSpec(kind=kind, title=f"example set: {kind.value}",
                     out_path=out_dir / filename)
    render_chart(spec, [series])
    print(f"wrote {spec.out_path}")
print("series lines are solid; the dashed line is the random-targeting "
      "reference.")
