#!/usr/bin/env python3
"""Scaled replay of the random-seed statistics for a generalized ant.

Defaults follow the standard protocol (11x11 uniform seeds, 1e5 steps) at
20,000 trials instead of ~2.9e8. Prints label counts with Wilson 99.9%
intervals so the rare-highway rate can be compared with the 0.12% figure.

    python scripts/lllr_statistics.py --trials 20000 --workers 4 --out lllr.csv
"""

import argparse
import math

from genant.experiment import ExperimentPlan, ExperimentStats, results_csv, run_trials

Z999 = 3.2905


def wilson(k, n, z=Z999):
    if n == 0:
        return float("nan"), float("nan")
    p = k / n
    denom = 1 + z * z / n
    centre = (p + z * z / (2 * n)) / denom
    half = z * math.sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom
    return max(0.0, centre - half), min(1.0, centre + half)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rule", default="LLLR")
    ap.add_argument("--trials", type=int, default=20_000)
    ap.add_argument("--horizon", type=int, default=100_000)
    ap.add_argument("--size", type=int, default=11)
    ap.add_argument("--master-seed", type=int, default=1)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", help="optional results CSV")
    args = ap.parse_args()

    plan = ExperimentPlan(args.rule, args.size, args.size, args.horizon, args.trials,
                          args.master_seed)
    results = run_trials(plan, workers=args.workers)
    stats = ExperimentStats.from_results(plan, results)
    print(f"rule={plan.rule} trials={plan.trials} horizon={plan.horizon} "
          f"seed pattern={args.size}x{args.size} master_seed={plan.master_seed}")
    for label, count in sorted(stats.counts.items(), key=lambda kv: -kv[1]):
        lo, hi = wilson(count, plan.trials)
        entry = stats.entry_steps.get(label)
        entry_txt = f" entry mean={entry['mean']:.0f} max={entry['max']:.0f}" if entry else ""
        print(f"  {label:20s} {count:8d}  {100 * count / plan.trials:7.3f}%  "
              f"[{100 * lo:.3f}%, {100 * hi:.3f}%]{entry_txt}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(results_csv(plan, results, stats))


if __name__ == "__main__":
    main()
