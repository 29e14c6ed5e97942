"""Randomized-seed experiments: uniform random patterns, bounded runs, tallies.

Random streams are ``numpy.random.Generator(PCG64(seed))`` with a per-trial
seed ``mix64(master_seed ^ (trial_index * GOLDEN))``, where ``mix64`` is the
SplitMix64 finalizer. Results depend only on the plan, never on scheduling.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .analysis import DetectorParams, HighwayReport, _detect_arrays, classify, load_catalog
from .core import AntConfiguration, RuleWord, apply_pattern, as_rule
from .engine import FastAnt
from .patterns import PatternGrid

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
RNG_NAME = "numpy.random.PCG64"
# Random seeds contain short stretches (under ~200 steps) that mimic
# small-period highways; experiments demand this many periodic steps.
EXPERIMENT_MIN_WINDOW = 1024


def experiment_detector(**overrides) -> DetectorParams:
    return DetectorParams(**{"min_window": EXPERIMENT_MIN_WINDOW, **overrides})


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def trial_seed(master_seed: int, trial_index: int) -> int:
    return mix64((master_seed & MASK64) ^ ((trial_index * GOLDEN) & MASK64))


def trial_stream(master_seed: int, trial_index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(trial_seed(master_seed, trial_index)))


def random_pattern(stream: np.random.Generator, width: int, height: int, m: int) -> PatternGrid:
    if width < 1 or height < 1:
        raise ValueError("pattern width and height must be >= 1")
    values = stream.integers(0, m, size=width * height)
    return PatternGrid.centred(width, height, values.tolist())


@dataclass
class ExperimentPlan:
    rule: RuleWord | str = "LLLR"
    pattern_width: int = 11
    pattern_height: int = 11
    horizon: int = 100_000
    trials: int = 0
    master_seed: int = 0
    detector: DetectorParams = field(default_factory=experiment_detector)
    background: int = 0

    def __post_init__(self):
        self.rule = as_rule(self.rule)
        if self.trials < 0:
            raise ValueError("trials must be >= 0")
        if self.horizon < 1:
            raise ValueError("horizon must be >= 1")

    def describe(self) -> dict:
        d = asdict(self)
        d["rule"] = str(self.rule)
        d["rng"] = RNG_NAME
        d["numpy"] = np.__version__
        return d


@dataclass
class TrialResult:
    trial: int
    label: str
    report: HighwayReport | None = None
    steps: int = 0


def run_until_highway(config: AntConfiguration, horizon: int, params: DetectorParams,
                      catalog=None):
    """Run with online detection; stop at the first certificate or at ``horizon``.

    Returns ``(report or None, steps simulated, FastAnt)``.
    """
    ant = FastAnt(config, capacity=min(horizon, 1 << 16))
    report = None
    while ant.t < horizon:
        ant.advance(min(params.check_interval, horizon - ant.t))
        report = _detect_arrays(ant.trace, ant.xs, ant.ys, 0, ant.t, params)
        if report is not None:
            break
    if report is not None and catalog is not None:
        report.classification = classify(report, catalog, config.rule)
    return report, ant.t, ant


def run_trial(plan: ExperimentPlan, trial_index: int, catalog=None) -> TrialResult:
    catalog = load_catalog() if catalog is None else catalog
    stream = trial_stream(plan.master_seed, trial_index)
    pattern = random_pattern(stream, plan.pattern_width, plan.pattern_height, plan.rule.m)
    config = apply_pattern(plan.background, pattern, plan.rule)
    report, steps, _ = run_until_highway(config, plan.horizon, plan.detector, catalog)
    label = report.classification if report is not None else "none"
    return TrialResult(trial_index, label, report, steps)


def _run_range(plan: ExperimentPlan, start: int, stop: int) -> list[TrialResult]:
    catalog = load_catalog()
    return [run_trial(plan, i, catalog) for i in range(start, stop)]


def run_trials(plan: ExperimentPlan, workers: int = 1, chunk: int = 250) -> list[TrialResult]:
    """All trials of ``plan``, ordered by trial index."""
    if workers <= 1 or plan.trials <= chunk:
        return _run_range(plan, 0, plan.trials)
    bounds = [(s, min(s + chunk, plan.trials)) for s in range(0, plan.trials, chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_run_range, [plan] * len(bounds), *zip(*bounds))
        results = [r for part in parts for r in part]
    results.sort(key=lambda r: r.trial)
    return results


@dataclass
class ExperimentStats:
    trials: int
    master_seed: int
    counts: dict[str, int]
    proportions: dict[str, float]
    entry_steps: dict[str, dict[str, float]]

    @classmethod
    def from_results(cls, plan: ExperimentPlan, results: list[TrialResult]) -> ExperimentStats:
        counts = Counter(r.label for r in results)
        counts = dict(sorted(counts.items()))
        total = len(results)
        props = {k: v / total for k, v in counts.items()} if total else {}
        entries: dict[str, dict[str, float]] = {}
        for label in counts:
            steps = [r.report.entry_step for r in results if r.label == label and r.report]
            if steps:
                entries[label] = {
                    "min": min(steps), "mean": sum(steps) / len(steps), "max": max(steps)
                }
        return cls(total, plan.master_seed, counts, props, entries)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)


def run_batch(plan: ExperimentPlan, workers: int = 1):
    """Returns ``(stats, per-trial results)``."""
    results = run_trials(plan, workers)
    return ExperimentStats.from_results(plan, results), results


CSV_HEADER = ["trial", "label", "entry_step", "period", "drift_a", "drift_b"]


def results_csv(plan: ExperimentPlan, results: list[TrialResult], stats: ExperimentStats) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in results:
        if r.report is None:
            writer.writerow([r.trial, r.label, "", "", "", ""])
        else:
            rep = r.report
            writer.writerow([r.trial, r.label, rep.entry_step, rep.period, *rep.drift])
    if results:
        buf.write(f"# plan: {json.dumps(plan.describe(), sort_keys=True)}\n")
        for line in stats.to_json().splitlines():
            buf.write(f"# {line}\n")
    return buf.getvalue()


def anomalies(results: list[TrialResult]) -> list[dict]:
    """Full reports of trials whose highway is not in the catalog."""
    return [
        {"trial": r.trial, **r.report.to_dict()}
        for r in results if r.report is not None and r.label.startswith(("unknown", "cycle"))
    ]
