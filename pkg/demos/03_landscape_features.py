"""Extract exploratory landscape features and check their invariances.

A problem's landscape is summarized from one Latin-hypercube sample of
(x, y) pairs. The classical feature vector has 54 values across seven
families (dispersion, y-distribution, level sets, meta-models,
information content, nearest-better clustering, PCA) plus one degenerate
flag per family that records when a family fell back to neutral values.
The "ela_scaled" variant min-max scales y first, which makes every
feature invariant under affine transformations of the objective.
"""

import numpy as np

from affinebench import (
    ELA_FEATURE_NAMES,
    build_instance,
    compute_ela,
    evaluate_sample,
    generate_suite,
    lhs_sample,
)

problem = build_instance(
    generate_suite(classes=(2, 14), instances=(1,), alphas=(0.5,), dim=2),
    "A_2_14_1_0.5",
)
points = lhs_sample(100, 2, seed=0)
sample = evaluate_sample(problem, points)
print(f"sample: {sample.points.shape[0]} points on {problem.pid}, "
      f"y range [{sample.values.min():.3g}, {sample.values.max():.3g}]")

feats = compute_ela(sample.points, sample.values)
print(f"\nfeature vector length: {len(feats)} "
      f"({len(ELA_FEATURE_NAMES) - 7} values + 7 family flags)")
show = ("disp.ratio_mean_02", "ela_distr.skewness", "ela_meta.lin_r2_adj",
        "ic.eps_max", "nbc.nn_nb_mean_ratio", "pca.expl_var_cov_x")
width = max(len(s) for s in show)
for name in show:
    print(f"  {name:<{width}}  {feats[ELA_FEATURE_NAMES.index(name)]: .4f}")
flags = [n for n in ELA_FEATURE_NAMES if n.endswith(".degenerate")]
print("degenerate flags:", {n.split(".")[0]: int(feats[ELA_FEATURE_NAMES.index(n)])
                            for n in flags})

# scaling y changes raw features (they see absolute magnitudes) ...
scaled_up = compute_ela(sample.points, 1e3 * sample.values + 7.0)
moved = int(np.sum(~np.isclose(feats, scaled_up, rtol=1e-9, atol=1e-12)))
print(f"\nafter y -> 1000*y + 7, {moved} of {len(feats)} raw features move")

# ... but the scaled variant normalizes y to [0, 1] first, so the whole
# vector is unchanged under any increasing affine map of the objective
base = compute_ela(sample.points, sample.values, scale_y=True)
trans = compute_ela(sample.points, 1e3 * sample.values + 7.0, scale_y=True)
print(f"ela_scaled max |difference|: {np.max(np.abs(base - trans)):.2e}")
assert np.max(np.abs(base - trans)) <= 1e-9
