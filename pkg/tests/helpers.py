"""Independent oracles and generators used across the test modules.

The oracles recompute the measures by their plainest possible definition
(explicit pair enumeration, literal prefix sums) so library results are
checked against a second route, not against themselves.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from gainslift import RankedTestSet, ScoredRecord


def brute_force_auc(ranked: RankedTestSet) -> Fraction:
    """Score-comparison AUC by enumerating every positive/negative pair."""
    pos = [r.score for r in ranked.records if r.label == 1]
    neg = [r.score for r in ranked.records if r.label == 0]
    doubled = 0
    for p in pos:
        for q in neg:
            if p > q:
                doubled += 2
            elif p == q:
                doubled += 1
    return Fraction(doubled, 2 * len(pos) * len(neg))


def prefix_gains(labels, n: int) -> int:
    """Literal definition: positives among the first n labels."""
    return sum(labels[:n])


def records_from_labels(labels, scores=None) -> list[ScoredRecord]:
    """Build records in the given order; default scores strictly decrease."""
    n = len(labels)
    if scores is None:
        scores = [float(n - i) for i in range(n)]
    return [ScoredRecord(id=f"r{i:04d}", score=float(s), label=int(y))
            for i, (y, s) in enumerate(zip(labels, scores))]


def random_instance(rng: np.random.Generator, max_n: int = 200,
                    tie_prob: float = 0.3) -> list[ScoredRecord]:
    """A random scored set with both classes present and duplicated scores.

    Each score after the first duplicates an earlier one with probability
    tie_prob, which exercises midrank handling.
    """
    n = int(rng.integers(2, max_n + 1))
    scores: list[float] = []
    for i in range(n):
        if i > 0 and rng.random() < tie_prob:
            scores.append(scores[int(rng.integers(0, i))])
        else:
            scores.append(float(rng.random()))
    labels = [int(v) for v in rng.integers(0, 2, size=n)]
    if all(y == 1 for y in labels):
        labels[int(rng.integers(0, n))] = 0
    if all(y == 0 for y in labels):
        labels[int(rng.integers(0, n))] = 1
    return [ScoredRecord(id=f"r{i:04d}", score=s, label=y)
            for i, (s, y) in enumerate(zip(scores, labels))]
