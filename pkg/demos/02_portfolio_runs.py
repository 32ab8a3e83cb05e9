"""Run a solver portfolio on a few problems and score the runs.

The portfolio holds differential-evolution and particle-swarm variants
that differ only in hyperparameters. Each (problem, algorithm, run)
cell records the best objective value found under a fixed iteration
budget. Raw best values are incomparable across problems, so each run
is min-max scaled across the algorithms that saw the same initial
population, then averaged over runs: 0 means best in every run, 1 means
worst in every run.
"""

import numpy as np

from affinebench import (
    PORTFOLIOS,
    build_instance,
    generate_suite,
    normalized_precision,
    run_portfolio,
    scale_run,
)

manifest = generate_suite(classes=(1, 3, 15), instances=(1,), alphas=(0.5,), dim=2)
problems = [build_instance(e) for e in manifest.entries[:3]]
print("portfolio 2DE+2PSO =", PORTFOLIOS["2DE+2PSO"])
print("problems:", [p.pid for p in problems])

records = []
for p in problems:
    records.extend(run_portfolio(p, "2DE+2PSO", runs=3, master_seed=0,
                                 budget=100, pop_size=20))
print(f"\n{len(records)} records (3 problems x 4 algorithms x 3 runs)")
r = records[0]
print(f"example: {r.problem_id} {r.algorithm} run {r.run} -> "
      f"best_y={r.best_y:.4e} after {r.budget_used} iterations")

# identical seeds give identical runs: the stream is keyed by
# (master_seed, problem, algorithm, run), never by wall clock
again = run_portfolio(problems[0], ("DE2",), runs=1, master_seed=0,
                      budget=100, pop_size=20)[0]
assert again.best_y == records[0].best_y
print("re-running the same cell reproduces best_y exactly")

# one run scaled across algorithms: best -> 0, worst -> 1, ties -> all 0
cells = [rec for rec in records
         if rec.problem_id == problems[2].pid and rec.run == 0]
y = np.array([rec.best_y for rec in cells])
print(f"\nraw best values, {problems[2].pid}, run 0:",
      [f"{v:.3e}" for v in y])
print("scaled across the four algorithms:   ",
      [f"{v:.3f}" for v in scale_run(y)])

perf = normalized_precision(records)
print("\nmean normalized precision (rows = problems):")
print("          " + "  ".join(f"{a:>6}" for a in perf.algorithms))
for pid in perf.problem_ids:
    row = perf.row(pid)
    print(f"{pid:<12}" + "  ".join(f"{v:6.3f}" for v in row))

# the single-best-solver baseline picks the algorithm with the lowest
# column mean over the training problems and always plays it
means = perf.column_means()
sbs = perf.algorithms[int(np.argmin(means))]
print("\ncolumn means:", {a: round(float(m), 3)
                          for a, m in zip(perf.algorithms, means)})
print(f"single best solver on this slice: {sbs}")
print("per-problem best scores:", np.round(perf.best_scores(), 3).tolist())
