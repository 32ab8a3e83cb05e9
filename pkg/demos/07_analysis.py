"""Ask whether the topological features add anything beyond the classical
set: correlation structure, cosine consistency, alignment, PCA rank.

Complementarity has two sides. Low pairwise Spearman correlation between
the blocks says the topological features are not a relabeling of the
classical ones; the alignment curve says whether distance in feature
space predicts distance in performance space, which is what selection
actually needs. PCA on the persistence-image block reveals how much of
its 50 columns is real dimensionality.
"""

import numpy as np

from affinebench import (
    alignment,
    build_instance,
    cosine_consistency,
    evaluate_sample,
    generate_suite,
    lhs_sample,
    normalized_precision,
    pca_reduce,
    per_feature_perf_corr,
    run_portfolio,
    spearman_matrix,
)
from affinebench.ela import compute_group as ela_group
from affinebench.rng import seed_from
from affinebench.tla import compute_group as tla_group

manifest = generate_suite(classes=(1, 3, 8, 15, 20, 23), instances=(1, 2),
                          alphas=(0.5,), dim=2)
problems = [build_instance(e) for e in manifest.entries]
samples, records = [], []
for p in problems:
    pts = lhs_sample(50, 2, seed=seed_from("sample", 0, p.pid))
    samples.append(evaluate_sample(p, pts))
    records.extend(run_portfolio(p, "2DE+2PSO", runs=1, master_seed=0,
                                 budget=20, pop_size=8))
ela = ela_group(samples)
tla = tla_group(samples)
perf = normalized_precision(records)
print(f"{len(problems)} problems, ela {ela.values.shape[1]} cols, "
      f"tinytla {tla.values.shape[1]} cols")

# cross-block Spearman: how often does a topology feature track a
# classical feature? the headline number is the share of weak pairs
corr = spearman_matrix((ela, tla))
n_ela = len(ela.names)
cross = np.abs(corr.rho[:n_ela, n_ela:])
head = [corr.names[i] for i in corr.leaf_order[:3]]
print(f"\ncorrelation matrix {corr.rho.shape[0]}x{corr.rho.shape[1]}, "
      f"clustered leaf order starts: {head}")
print(f"cross-block |rho| <= 0.5: {np.mean(cross <= 0.5):.1%} of pairs "
      f"(max {cross.max():.3f})")

# per-feature view against one portfolio member
rho = per_feature_perf_corr(tla, perf, "DE2")
strongest = max(rho.items(), key=lambda kv: abs(kv[1]))
print(f"strongest tinytla feature vs DE2 scores: "
      f"{strongest[0]} (rho {strongest[1]:+.3f})")

# cosine consistency: do the two blocks agree on which problems are
# similar? each row is one problem pair scored inside each block
pairs = cosine_consistency((ela, tla), n_pairs=200, seed=0)
e = np.array([r["ela"] for r in pairs])
t = np.array([r["tinytla"] for r in pairs])
print(f"\ncosine consistency over {len(pairs)} pairs: "
      f"ela mean {e.mean():.3f}, tinytla mean {t.mean():.3f}, "
      f"between-block correlation {np.corrcoef(e, t)[0, 1]:.3f}")

# alignment: bin problem pairs by feature-space cosine, report the mean
# performance-space cosine per bin; a rising curve means the features
# order problems the way the portfolio experiences them
for group in (ela, tla):
    curve = alignment(group, perf, n_problems=40, seed=0)["curve"]
    lo, hi = curve[0], curve[-1]
    print(f"alignment {group.group}: {len(curve)} occupied bins, "
          f"perf_sim {lo['mean']:.3f} at feature_sim {lo['bin']:+.2f} -> "
          f"{hi['mean']:.3f} at {hi['bin']:+.2f}")

# the 50 persistence-image columns sit on a much lower-dimensional sheet
pca = pca_reduce(tla.values, dims=20)
kept = pca.projection.shape[1]
print(f"\nPCA on tinytla: rank {pca.rank}, kept {kept} components, "
      f"cumulative share {pca.cumulative[-1]:.4f}"
      + (f" ({pca.note})" if pca.note else ""))
