#!/usr/bin/env python3
"""Find the sparsest seed patterns that lead an ant into each catalogued highway.

Patterns inside a ``box x box`` square centred on the origin are enumerated in
order of their number of non-background cells, so the first hit per label is
a minimal seed for that box (ant at the origin heading Up). Each hit is
written as a pattern file, e.g. ``seeds/LLLR-complex-156.txt``.

    python scripts/find_seeds.py --rule LLLR --box 3 --out seeds
"""

import argparse
import itertools
from pathlib import Path

from genant.analysis import load_catalog
from genant.core import RuleWord, apply_pattern
from genant.experiment import experiment_detector, run_until_highway
from genant.patterns import PatternGrid, serialize_pattern


def patterns_by_weight(box, m, max_weight):
    cells = box * box
    for weight in range(max_weight + 1):
        for where in itertools.combinations(range(cells), weight):
            for states in itertools.product(range(1, m), repeat=weight):
                values = [0] * cells
                for idx, v in zip(where, states):
                    values[idx] = v
                yield weight, PatternGrid.centred(box, box, values)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rule", default="LLLR")
    ap.add_argument("--box", type=int, default=3)
    ap.add_argument("--max-weight", type=int, default=4, help="most non-zero cells to try")
    ap.add_argument("--horizon", type=int, default=100_000)
    ap.add_argument("--out", default="seeds")
    args = ap.parse_args()

    rule = RuleWord.parse(args.rule)
    catalog = load_catalog()
    wanted = {e.name for e in catalog if e.rule == rule}
    params = experiment_detector()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    print(f"rule={rule} box={args.box} max_weight={args.max_weight} horizon={args.horizon}")

    found = {}
    tried = 0
    for weight, pattern in patterns_by_weight(args.box, rule.m, args.max_weight):
        tried += 1
        report, _, _ = run_until_highway(apply_pattern(0, pattern, rule), args.horizon, params,
                                         catalog)
        label = report.classification if report else "none"
        if label in found:
            continue
        found[label] = pattern
        path = out / f"{label.replace('(', '_').replace(')', '').replace('=', '')}.txt"
        header = (f"# {rule}: reaches {label} (period {report and report.period}, "
                  f"entry step {report and report.entry_step}); {weight} non-zero cells\n")
        path.write_text(header + serialize_pattern(pattern))
        print(f"{label:20s} weight={weight} after {tried} patterns -> {path}")
        if wanted <= set(found):
            break
    missing = wanted - set(found)
    if missing:
        print("not reached within this box/weight:", ", ".join(sorted(missing)))


if __name__ == "__main__":
    main()
