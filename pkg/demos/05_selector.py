"""Train the algorithm selector and compare it with the dummy baseline.

A multi-target random forest maps a problem's feature vector to the
expected normalized precision of every portfolio member; the selector
plays the argmin. The dummy baseline ignores features entirely and
always plays the algorithm with the best training mean (the single best
solver). Selection quality is scored per test problem as
1 - (selected score - best possible score), averaged, so 1.0 means the
selector always picked an optimal algorithm.
"""

import numpy as np

from affinebench import (
    ForestConfig,
    as_performance,
    build_instance,
    dummy_vector,
    evaluate_plan,
    evaluate_sample,
    feature_importance,
    generate_suite,
    lhs_sample,
    make_split,
    normalized_precision,
    predict,
    run_portfolio,
    select,
    train_forest,
)
from affinebench.ela import compute_group
from affinebench.rng import seed_from

manifest = generate_suite(classes=(1, 2, 3, 4), instances=(1, 2),
                          alphas=(0.5,), dim=2)
problems = [build_instance(e) for e in manifest.entries]
print(f"suite slice: {len(problems)} problems, portfolio 2DE+2PSO, 2 runs")

records = []
samples = []
for p in problems:
    records.extend(run_portfolio(p, "2DE+2PSO", runs=2, master_seed=0,
                                 budget=50, pop_size=16))
    pts = lhs_sample(60, 2, seed=seed_from("sample", 0, p.pid))
    samples.append(evaluate_sample(p, pts))
perf = normalized_precision(records)
features = compute_group(samples)
print(f"features: {features.values.shape[0]} rows x "
      f"{features.values.shape[1]} columns ({features.group})")

# a single unbagged tree splits until every leaf is pure, so it can
# reproduce its own training targets bit for bit
memo = train_forest(features, perf, ForestConfig(n_trees=1, bootstrap=False))
X = np.vstack([features.row(p) for p in perf.problem_ids])
assert np.array_equal(predict(memo, X), perf.values)
print("1 tree, no bootstrap: training targets reproduced exactly")

model = train_forest(features, perf, ForestConfig(n_trees=50, seed=3))
ranked = sorted(feature_importance(model).items(), key=lambda kv: -kv[1])
print("\ntop split-gain importances (50-tree forest):")
for name, score in ranked[:5]:
    print(f"  {name:<24} {score:.4f}")

# selection on the training slice itself: argmin of predicted scores,
# scored against the true performance rows
choices = select(predict(model, X))
truth = perf.values
print(f"\nin-sample selection score: "
      f"{as_performance(choices, truth):.4f} (1.0 = always optimal)")
dummy = dummy_vector(perf, perf.problem_ids)
sbs = perf.algorithms[int(np.argmin(dummy))]
dummy_choices = np.full(len(perf.problem_ids), int(np.argmin(dummy)))
print(f"dummy always plays {sbs}: {as_performance(dummy_choices, truth):.4f}")

# the real measurement holds out whole instances: train on one slice of
# the suite, select on unseen problems, repeat per fold
plan = make_split(manifest, "instance")
rows = evaluate_plan(features, plan, perf, ForestConfig(n_trees=50, seed=3))
print(f"\ninstance protocol, {len(rows)} folds "
      f"(train {rows[0]['n_train']}, test {rows[0]['n_test']}):")
for row in rows:
    print(f"  fold {row['fold']}: model {row['model_as']:.4f}  "
          f"dummy {row['dummy_as']:.4f}")
deltas = [row["model_as"] - row["dummy_as"] for row in rows]
print(f"median delta (model - dummy): {np.median(deltas):+.4f}")
