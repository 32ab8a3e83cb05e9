"""Build affine recombinations of black-box problems and look inside one.

Every benchmark problem F is built from two parents P_i, P_j by blending
their log-precision landscapes with a weight alpha and re-exponentiating;
the optimum of F sits at the optimum of the first parent. The full suite
takes every ordered pair of the 24 problem classes, 5 instances each, and
three alpha values: 24 * 23 * 5 * 3 = 8280 problems.
"""

import numpy as np

from affinebench import build_instance, generate_suite, lhs_sample
from affinebench.suite import EPS

# a small slice of the suite: 4 classes, 2 instances, one alpha
manifest = generate_suite(classes=(1, 2, 8, 21), instances=(1, 2),
                          alphas=(0.5,), dim=2)
print(f"suite slice: {len(manifest.entries)} problems "
      f"(4*3 ordered pairs x 2 instances x 1 alpha)")
print("first ids:", [e.problem_id for e in manifest.entries[:4]])

problem = build_instance(manifest, "A_1_8_1_0.5")
print(f"\n{problem.pid}: parents f{problem.entry.class_i} and "
      f"f{problem.entry.class_j}, alpha={problem.entry.alpha}")

# the optimum is inherited from the first parent, and the doubly clamped
# log blend bottoms out at exactly EPS there
at_opt = float(problem.evaluate(problem.x_opt[None, :])[0])
print(f"f(x_opt) = {at_opt!r}  (clamp floor {EPS!r})")

# interpolation: alpha=0.75 leans toward parent i, 0.25 toward parent j
x = np.array([[1.5, -2.0]])
for alpha in (0.25, 0.5, 0.75):
    blend = build_instance(generate_suite(classes=(1, 8), instances=(1,),
                                          alphas=(alpha,), dim=2),
                           f"A_1_8_1_{alpha}")
    print(f"alpha={alpha}: f({x[0].tolist()}) = {blend.evaluate(x)[0]:.6g}")

# Latin hypercube sampling puts exactly one point in each of n strata per
# dimension; this is the design used for feature extraction
points = lhs_sample(10, 2, seed=0)
strata = np.floor((points + 5.0) / 10.0 * 10).astype(int)
print("\nLHS strata per dimension (each a permutation of 0..9):")
print(" x1:", sorted(strata[:, 0].tolist()))
print(" x2:", sorted(strata[:, 1].tolist()))
