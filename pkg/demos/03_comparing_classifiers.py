#!/usr/bin/env python3
"""Why picking the classifier with the best AUC can cost you lift.

Starting from the bundled example ranking, we build two label perturbations:
one with HIGHER AUC but weaker lift exactly where a constrained campaign
would operate, and one with LOWER AUC whose lift is at least as good through
two thirds of the ranking. Then we let the brute-force search hunt for such
conflicts on its own.
"""

from gainslift import (ClassifierRun, SwapSpec, apply_swaps, auc_pairs,
                       compare_at, dominance, example24_records,
                       find_disagreement, lift, rank_records, render_decimal,
                       render_exact)

original = rank_records(example24_records())
higher_auc = apply_swaps(original, SwapSpec(pairs=((6, 8), (12, 16))))
lower_auc = apply_swaps(original, SwapSpec(pairs=((8, 9), (16, 19))))

print("three rankings of the same 24 labels:")
for name, ranked in (("original", original), ("higher-auc", higher_auc),
                     ("lower-auc", lower_auc)):
    print(f"  {name:>10}: auc = {render_exact(auc_pairs(ranked))} "
          f"({render_decimal(auc_pairs(ranked), 3)})  "
          f"lift@6 = {render_decimal(lift(ranked, 6))}")

print("\nhigher AUC does not mean higher lift where it matters:")
print(f"  higher-auc beats original on AUC "
      f"({render_decimal(auc_pairs(higher_auc), 3)} vs "
      f"{render_decimal(auc_pairs(original), 3)})")
print(f"  yet at a budget of 6 its lift is "
      f"{render_decimal(lift(higher_auc, 6))} vs "
      f"{render_decimal(lift(original, 6))} for the original.")

table = compare_at([ClassifierRun("original", original),
                    ClassifierRun("higher-auc", higher_auc)],
                   targets=[6, 10, 14])
print("\nper-budget winners (no splicing: each budget judged on its own):")
for n in table.targets:
    print(f"  n={n:>2}: winner {', '.join(table.winner_at(n))}")

report = dominance(ClassifierRun("original", original),
                   ClassifierRun("higher-auc", higher_auc))
print(f"\nlift-curve comparison verdict: {report.verdict.value}")
print(f"  original above on rank ranges : {report.a_above}")
print(f"  higher-auc above on rank ranges: {report.b_above}")

print("\nsearching all C(10,5)=252 label arrangements for a pair where")
print("whole-set accuracy at n=5 and lift at n=2 pick opposite winners:")
found = find_disagreement("accuracy@5", "lift@2", 10, 5)
print(f"  X = {''.join(map(str, found.labels_x))}")
print(f"  Y = {''.join(map(str, found.labels_y))}")
print(f"  accuracy@5: X={render_exact(found.value_a_x)} "
      f"Y={render_exact(found.value_a_y)} -> prefers "
      f"{'X' if found.a_prefers_x else 'Y'}")
print(f"  lift@2    : X={render_exact(found.value_b_x)} "
      f"Y={render_exact(found.value_b_y)} -> prefers "
      f"{'X' if found.b_prefers_x else 'Y'}")
print(f"  certified by re-evaluation: {found.certify()}")
