"""Multi-classifier comparison and metric-disagreement search.

Comparisons assume one shared ground truth: every run scores the same test
set, so the runs carry the same label multiset in different orders. The
disagreement search works on bare label sequences (an implicit strictly
decreasing score vector), exhaustively when the arrangement space is small
and by seeded sampling otherwise.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import BudgetExhaustedError, ValidationError
from .metrics import auc_pairs, cum_gains, lift
from .records import RankedTestSet, ScoredRecord, rank_records, reranked_copy

EXHAUSTIVE_LIMIT = 1_000_000
LEX_REFINE_LIMIT = 2_000  # full lex-order pair scan only below this many arrangements


@dataclass(frozen=True, slots=True)
class ClassifierRun:
    """A named ranking of the shared test set."""

    name: str
    ranked: RankedTestSet


@dataclass(frozen=True)
class SwapSpec:
    """Rank-position pairs whose labels get exchanged; positions must be
    pairwise disjoint so the swap set is an involution."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        flat = [r for pair in self.pairs for r in pair]
        if len(set(flat)) != len(flat):
            raise ValidationError(f"swap ranks overlap: {self.pairs}")


def apply_swaps(ranked: RankedTestSet, swaps: SwapSpec) -> RankedTestSet:
    """Exchange labels at the given rank positions; order and scores stay."""
    labels = list(r.label for r in ranked.records)
    for a, b in swaps.pairs:
        for r in (a, b):
            if not 1 <= r <= ranked.n_total:
                raise ValidationError(
                    f"swap rank {r} out of range [1, {ranked.n_total}]")
        labels[a - 1], labels[b - 1] = labels[b - 1], labels[a - 1]
    return reranked_copy(ranked, labels)


def _check_shared_labels(runs: Sequence[ClassifierRun]) -> None:
    reference = Counter(runs[0].ranked.labels)
    for run in runs[1:]:
        if Counter(run.ranked.labels) != reference:
            raise ValidationError(
                f"run {run.name!r} has a different label multiset than "
                f"{runs[0].name!r}; comparisons need the same ground truth")


def accuracy_at(ranked: RankedTestSet, n: int) -> Fraction:
    """Whole-set accuracy of the classifier that predicts the top-n positive.

    Unlike the top-n confusion matrix this counts true negatives below the
    cutoff: (tp_n + tn_n_full) / N.
    """
    ranked.check_cutoff(n, minimum=1)
    tp = ranked.positives_in_prefix(n)
    tn = ranked.n_total - n - (ranked.n_pos - tp)
    return Fraction(Fraction(tp + tn), ranked.n_total)


@dataclass(frozen=True)
class CompareEntry:
    run: str
    n: int
    cum_gains: Fraction | int
    lift: Fraction


@dataclass(frozen=True)
class CompareTable:
    """Per-target gains/lift for each run plus the winner(s) at each target.

    Winners are never spliced across targets: each target is judged on its
    own, and combining "best run per n" into one curve is not meaningful.
    """

    targets: tuple[int, ...]
    entries: tuple[CompareEntry, ...]
    winners: dict[int, tuple[str, ...]] = field(compare=False)

    def winner_at(self, n: int) -> tuple[str, ...]:
        return self.winners[n]


def compare_at(runs: Sequence[ClassifierRun],
               targets: Sequence[int]) -> CompareTable:
    """Evaluate gains and lift for every run at every target cutoff."""
    if len(runs) < 2:
        raise ValidationError("comparison needs at least two runs")
    names = [r.name for r in runs]
    if len(set(names)) != len(names):
        raise ValidationError(f"duplicate run names: {names}")
    _check_shared_labels(runs)
    if not targets:
        raise ValidationError("no target cutoffs given")
    n_total = runs[0].ranked.n_total
    for n in targets:
        if not 1 <= n <= n_total:
            raise ValidationError(f"target n={n} out of range [1, {n_total}]")

    entries = []
    winners: dict[int, tuple[str, ...]] = {}
    for n in targets:
        best: Optional[Fraction] = None
        gains_by_run = []
        for run in runs:
            g = cum_gains(run.ranked, n)
            gains_by_run.append((run.name, g))
            entries.append(CompareEntry(run=run.name, n=n, cum_gains=g,
                                        lift=lift(run.ranked, n)))
            gf = Fraction(g)
            best = gf if best is None or gf > best else best
        winners[n] = tuple(name for name, g in gains_by_run
                           if Fraction(g) == best)
    return CompareTable(targets=tuple(targets), entries=tuple(entries),
                        winners=winners)


# ---------------------------------------------------------------------------
# dominance
# ---------------------------------------------------------------------------

class DominanceVerdict(Enum):
    A_DOMINATES = "a-dominates"
    B_DOMINATES = "b-dominates"
    CROSSING = "crossing"


@dataclass(frozen=True)
class DominanceReport:
    """Where each run's lift curve sits above the other's, in rank units.

    Equal curves report CROSSING with both interval lists empty.
    """

    verdict: DominanceVerdict
    a_above: tuple[tuple[int, int], ...]
    b_above: tuple[tuple[int, int], ...]

    @property
    def is_tie(self) -> bool:
        return not self.a_above and not self.b_above


def _runs_to_intervals(ranks: list[int]) -> tuple[tuple[int, int], ...]:
    intervals = []
    for n in ranks:
        if intervals and intervals[-1][1] == n - 1:
            intervals[-1] = (intervals[-1][0], n)
        else:
            intervals.append((n, n))
    return tuple(intervals)


def dominance(run_a: ClassifierRun, run_b: ClassifierRun) -> DominanceReport:
    """Compare two lift curves pointwise over every cutoff."""
    _check_shared_labels([run_a, run_b])
    n_total = run_a.ranked.n_total
    a_above: list[int] = []
    b_above: list[int] = []
    for n in range(1, n_total + 1):
        la = lift(run_a.ranked, n)
        lb = lift(run_b.ranked, n)
        if la > lb:
            a_above.append(n)
        elif lb > la:
            b_above.append(n)
    if a_above and not b_above:
        verdict = DominanceVerdict.A_DOMINATES
    elif b_above and not a_above:
        verdict = DominanceVerdict.B_DOMINATES
    else:
        verdict = DominanceVerdict.CROSSING
    return DominanceReport(verdict=verdict,
                           a_above=_runs_to_intervals(a_above),
                           b_above=_runs_to_intervals(b_above))


# ---------------------------------------------------------------------------
# metric-disagreement search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Metric:
    """A metric identifier: 'auc', 'lift@n', or 'accuracy@n'."""

    kind: str
    at: Optional[int] = None

    def __str__(self) -> str:
        return self.kind if self.at is None else f"{self.kind}@{self.at}"

    def evaluator(self, n_total: int, n_pos: int) -> Callable[[Sequence[int]], Fraction]:
        """Exact evaluation on a label sequence whose implicit scores
        strictly decrease with rank."""
        n_neg = n_total - n_pos
        if self.kind == "auc":
            if n_pos == 0 or n_neg == 0:
                raise ValidationError("auc needs both classes present")

            def _auc(labels: Sequence[int]) -> Fraction:
                discordant = 0
                neg_seen = 0
                for y in labels:
                    if y:
                        discordant += neg_seen
                    else:
                        neg_seen += 1
                return Fraction(n_pos * n_neg - discordant, n_pos * n_neg)

            return _auc

        at = self.at
        if at is None or not 1 <= at <= n_total:
            raise ValidationError(
                f"metric {self} needs a cutoff in [1, {n_total}]")
        if self.kind == "lift":
            if n_pos == 0:
                raise ValidationError("lift needs at least one positive")

            def _lift(labels: Sequence[int]) -> Fraction:
                return Fraction(sum(labels[:at]) * n_total, at * n_pos)

            return _lift
        if self.kind == "accuracy":

            def _accuracy(labels: Sequence[int]) -> Fraction:
                tp = sum(labels[:at])
                return Fraction(tp + (n_total - at) - (n_pos - tp), n_total)

            return _accuracy
        raise ValidationError(f"unknown metric kind {self.kind!r}")


def parse_metric(text: str) -> Metric:
    """Parse 'auc', 'lift@6', 'accuracy@5'."""
    text = text.strip().lower()
    if text == "auc":
        return Metric("auc")
    if "@" in text:
        kind, _, param = text.partition("@")
        if kind in ("lift", "accuracy"):
            try:
                return Metric(kind, int(param))
            except ValueError:
                pass
    raise ValidationError(
        f"unknown metric {text!r}: expected auc, lift@<n>, or accuracy@<n>")


@dataclass(frozen=True)
class DisagreementReport:
    """A certified counterexample: two rankings the metrics order oppositely.

    `prefers_x` is True when the metric ranks labels_x ahead of labels_y.
    The two preferences must differ, and `certify` re-derives every value
    through the public metric implementations.
    """

    metric_a: Metric
    metric_b: Metric
    labels_x: tuple[int, ...]
    labels_y: tuple[int, ...]
    value_a_x: Fraction
    value_a_y: Fraction
    value_b_x: Fraction
    value_b_y: Fraction
    exhaustive: bool

    def __post_init__(self) -> None:
        if self.a_prefers_x == self.b_prefers_x:
            raise ValidationError(
                "not a disagreement: both metrics prefer the same ranking")

    @property
    def a_prefers_x(self) -> bool:
        return self.value_a_x > self.value_a_y

    @property
    def b_prefers_x(self) -> bool:
        return self.value_b_x > self.value_b_y

    def certify(self) -> bool:
        """Recompute both metrics on both rankings via the library path."""
        for labels, va, vb in ((self.labels_x, self.value_a_x, self.value_b_x),
                               (self.labels_y, self.value_a_y, self.value_b_y)):
            ranked = ranked_from_labels(labels)
            if evaluate_metric(self.metric_a, ranked) != va:
                return False
            if evaluate_metric(self.metric_b, ranked) != vb:
                return False
        return self.a_prefers_x != self.b_prefers_x


def ranked_from_labels(labels: Sequence[int]) -> RankedTestSet:
    """A ranked set realizing a label sequence with strictly decreasing
    scores (rank r gets score N - r + 1)."""
    n = len(labels)
    records = [ScoredRecord(id=f"r{i+1:03d}", score=float(n - i), label=int(y))
               for i, y in enumerate(labels)]
    return rank_records(records)


def evaluate_metric(metric: Metric, ranked: RankedTestSet) -> Fraction:
    """Evaluate a parsed metric through the public single-run operations."""
    if metric.kind == "auc":
        return auc_pairs(ranked)
    if metric.kind == "lift":
        return lift(ranked, metric.at)
    if metric.kind == "accuracy":
        return accuracy_at(ranked, metric.at)
    raise ValidationError(f"unknown metric kind {metric.kind!r}")


def _arrangements_exhaustive(n_total: int, n_pos: int) -> list[tuple[int, ...]]:
    out = []
    for positions in combinations(range(n_total), n_pos):
        labels = [0] * n_total
        for p in positions:
            labels[p] = 1
        out.append(tuple(labels))
    return out


def _arrangements_sampled(n_total: int, n_pos: int, budget: int,
                          seed: int) -> list[tuple[int, ...]]:
    rng = np.random.default_rng(seed)
    seen: set[tuple[int, ...]] = set()
    out = []
    for _ in range(budget):
        positions = rng.choice(n_total, size=n_pos, replace=False)
        labels = [0] * n_total
        for p in positions:
            labels[p] = 1
        t = tuple(labels)
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def _scan_for_inversion(values: list[tuple[Fraction, Fraction, int]]
                        ) -> Optional[tuple[int, int]]:
    """Find i, j with a_i < a_j but b_i > b_j among (a, b, index) triples."""
    ordered = sorted(values, key=lambda t: (t[0], t[1]))
    best_b: Optional[Fraction] = None
    best_idx = -1
    k = 0
    while k < len(ordered):
        # process one group of equal a at a time
        group_end = k
        a_here = ordered[k][0]
        while group_end < len(ordered) and ordered[group_end][0] == a_here:
            group_end += 1
        if best_b is not None:
            for t in ordered[k:group_end]:
                if t[1] < best_b:
                    return best_idx, t[2]
        for t in ordered[k:group_end]:
            if best_b is None or t[1] > best_b:
                best_b = t[1]
                best_idx = t[2]
        k = group_end
    return None


def find_disagreement(metric_a: Metric | str, metric_b: Metric | str,
                      n_total: int, n_pos: int, *,
                      budget: int = 200_000,
                      seed: int = 0) -> Optional[DisagreementReport]:
    """Search label arrangements for a pair the two metrics order oppositely.

    Enumerates the whole space when C(n_total, n_pos) fits the budget (then a
    None return certifies no disagreement exists); otherwise samples `budget`
    arrangements with the seeded generator and raises BudgetExhaustedError if
    nothing turns up, since absence is then not certified.
    """
    if isinstance(metric_a, str):
        metric_a = parse_metric(metric_a)
    if isinstance(metric_b, str):
        metric_b = parse_metric(metric_b)
    if n_total < 2 or not 1 <= n_pos <= n_total - 1:
        raise ValidationError(
            f"need n_total >= 2 and 1 <= n_pos < n_total, got "
            f"n_total={n_total}, n_pos={n_pos}")
    if budget < 2:
        raise ValidationError("budget must allow at least two arrangements")

    space = math.comb(n_total, n_pos)
    exhaustive = space <= min(budget, EXHAUSTIVE_LIMIT)
    if exhaustive:
        arrangements = _arrangements_exhaustive(n_total, n_pos)
    else:
        arrangements = _arrangements_sampled(n_total, n_pos, budget, seed)

    eval_a = metric_a.evaluator(n_total, n_pos)
    eval_b = metric_b.evaluator(n_total, n_pos)
    values = [(eval_a(labels), eval_b(labels), i)
              for i, labels in enumerate(arrangements)]

    hit = _scan_for_inversion(values)
    if hit is None:
        if exhaustive:
            return None
        raise BudgetExhaustedError(
            f"no disagreement among {len(arrangements)} sampled arrangements "
            f"(space size {space}); absence is not certified")

    i, j = hit
    if exhaustive and len(arrangements) <= LEX_REFINE_LIMIT:
        i, j = _lex_first_pair(arrangements, values) or (i, j)

    lx, ly = arrangements[i], arrangements[j]
    ax, ay = eval_a(lx), eval_a(ly)
    bx, by = eval_b(lx), eval_b(ly)
    if ax < ay:  # normalize so metric_a prefers x
        lx, ly, ax, ay, bx, by = ly, lx, ay, ax, by, bx
    return DisagreementReport(metric_a=metric_a, metric_b=metric_b,
                              labels_x=lx, labels_y=ly,
                              value_a_x=ax, value_a_y=ay,
                              value_b_x=bx, value_b_y=by,
                              exhaustive=exhaustive)


def _lex_first_pair(arrangements: list[tuple[int, ...]],
                    values: list[tuple[Fraction, Fraction, int]]
                    ) -> Optional[tuple[int, int]]:
    """First disagreeing pair in lexicographic order of label tuples."""
    order = sorted(range(len(arrangements)), key=lambda i: arrangements[i])
    by_index = {idx: (a, b) for a, b, idx in values}
    for pos_x, i in enumerate(order):
        ai, bi = by_index[i]
        for j in order[pos_x + 1:]:
            aj, bj = by_index[j]
            if (ai > aj and bi < bj) or (ai < aj and bi > bj):
                return i, j
    return None
