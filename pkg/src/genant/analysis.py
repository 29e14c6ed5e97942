"""Highway detection, periodic-word utilities, catalog and classification."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from importlib import resources
from pathlib import Path

import numpy as np
from numba import njit

from .core import RuleWord, Trace, Trajectory, as_rule


@dataclass(frozen=True)
class DetectorParams:
    n_max: int = 2048
    confirm_periods: int = 3
    check_interval: int = 256
    min_window: int = 0

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        if self.confirm_periods < 2:
            raise ValueError("confirm_periods must be >= 2")
        if self.check_interval < 1:
            raise ValueError("check_interval must be >= 1")
        if self.min_window < 0:
            raise ValueError("min_window must be >= 0")


@dataclass
class HighwayReport:
    entry_step: int
    period: int
    drift: tuple[int, int]
    word: str
    speed: float
    classification: str | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["drift"] = list(self.drift)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> HighwayReport:
        return cls(
            int(d["entry_step"]), int(d["period"]), tuple(d["drift"]), d["word"],
            float(d["speed"]), d.get("classification"),
        )


def speed(period: int, drift: tuple[int, int]) -> float:
    if period < 1:
        raise ValueError("period must be >= 1")
    return math.hypot(drift[0], drift[1]) / period


def word_str(symbols) -> str:
    symbols = [int(s) for s in symbols]
    if all(s < 10 for s in symbols):
        return "".join(map(str, symbols))
    return ",".join(map(str, symbols))


def word_symbols(word: str) -> list[int]:
    if "," in word:
        return [int(t) for t in word.split(",")]
    return [int(c) for c in word]


def canonical_rotation(word):
    """Least cyclic rotation (Booth's algorithm). Returns the input's type."""
    n = len(word)
    if n == 0:
        raise ValueError("canonical rotation of an empty word")
    s = list(word) * 2
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = fail[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:  # i == -1 here
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return word[k:] + word[:k]


def primitive_period(word) -> int:
    n = len(word)
    if n == 0:
        raise ValueError("primitive period of an empty word")
    for p in range(1, n + 1):
        if n % p == 0 and all(word[t] == word[t - p] for t in range(p, n)):
            return p
    return n


@njit(cache=True)
def _find_period(x, px, py, lo, hi, n_max, k, min_window):
    avail = hi - lo
    last = hi - 1
    for n in range(1, n_max + 1):
        span = max((k + 1) * n, min_window)
        if span > avail:
            break
        da = px[last] - px[last - n]
        db = py[last] - py[last - n]
        ok = True
        for j in range(1, span // n - 1):
            a = last - j * n
            if px[a] - px[a - n] != da or py[a] - py[a - n] != db:
                ok = False
                break
        if not ok:
            continue
        for t in range(hi - span, hi - n):
            if x[t + n] != x[t] or px[t + n] - px[t] != da or py[t + n] - py[t] != db:
                ok = False
                break
        if ok:
            return n, da, db
    return 0, 0, 0


@njit(cache=True)
def _back_extend(x, px, py, lo, t, n, da, db):
    # t: first index already known to satisfy the conditions
    while t - 1 >= lo:
        s = t - 1
        if x[s + n] != x[s] or px[s + n] - px[s] != da or py[s + n] - py[s] != db:
            break
        t = s
    return t


def _detect_arrays(x, px, py, lo, hi, params: DetectorParams, offset: int = 0):
    k = params.confirm_periods
    n, da, db = _find_period(x, px, py, lo, hi, params.n_max, k, params.min_window)
    if n == 0:
        return None
    t0 = _back_extend(x, px, py, lo, hi - max((k + 1) * n, params.min_window), n, da, db)
    word = word_str(canonical_rotation([int(v) for v in x[t0:t0 + n]]))
    return HighwayReport(t0 + offset, n, (int(da), int(db)), word, speed(n, (da, db)))


def detect_highway(trace: Trace, trajectory: Trajectory, params: DetectorParams | None = None):
    """Certify a highway over the tail of a recording, or return None.

    Looks for the smallest period ``n <= n_max`` such that the final
    ``max((K+1)*n, min_window)`` steps satisfy ``x[t+n] == x[t]`` and
    ``y[t+n] == y[t] + drift``, then extends the periodic segment backwards
    to find the entry step. ``min_window`` guards against very short periods
    mimicked inside a seed pattern.
    """
    params = params or DetectorParams()
    if len(trace) != len(trajectory) or trace.start != trajectory.start:
        raise ValueError("trace and trajectory must cover the same steps")
    x = np.ascontiguousarray(trace.symbols, dtype=np.int64)
    pos = np.asarray(trajectory.positions, dtype=np.int64).reshape(-1, 2)
    px = np.ascontiguousarray(pos[:, 0])
    py = np.ascontiguousarray(pos[:, 1])
    return _detect_arrays(x, px, py, 0, len(x), params, offset=trace.start)


def verify_report(trace: Trace, trajectory: Trajectory, report: HighwayReport) -> bool:
    """Independent numpy re-check of a report over ``[entry_step, end)``."""
    n = report.period
    t0 = report.entry_step - trace.start
    x = np.asarray(trace.symbols)
    y = np.asarray(trajectory.positions).reshape(-1, 2)
    if t0 < 0 or len(x) - t0 <= n:
        return False
    ok_x = np.array_equal(x[t0 + n:], x[t0:-n])
    ok_y = np.all(y[t0 + n:] - y[t0:-n] == np.asarray(report.drift))
    return bool(ok_x and ok_y)


# catalog ------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    rule: RuleWord
    name: str
    period: int
    drift_magnitude: tuple[int, int] | None
    word_class: str | None = None

    def __post_init__(self):
        if self.word_class is not None:
            length = len(word_symbols(self.word_class))
            if length != self.period:
                raise ValueError(f"{self.name}: word length {length} != period {self.period}")
            if word_str(canonical_rotation(word_symbols(self.word_class))) != self.word_class:
                raise ValueError(f"{self.name}: word is not in canonical rotation")

    def format(self) -> str:
        a, b = self.drift_magnitude or ("*", "*")
        line = f"{self.rule} {self.name} {self.period} {a} {b}"
        return line + (f" {self.word_class}" if self.word_class else "")


class CatalogError(ValueError):
    pass


def parse_catalog(text: str) -> list[CatalogEntry]:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if len(tok) not in (5, 6):
            raise CatalogError(f"line {lineno}: expected 'rule name period |a| |b| [word]'")
        try:
            mag = None if tok[3:5] == ["*", "*"] else (int(tok[3]), int(tok[4]))
            entry = CatalogEntry(
                RuleWord.parse(tok[0]), tok[1], int(tok[2]), mag,
                tok[5] if len(tok) == 6 else None,
            )
        except ValueError as exc:
            raise CatalogError(f"line {lineno}: {exc}") from None
        entries.append(entry)
    if not entries:
        raise CatalogError("catalog is empty")
    return entries


def load_catalog(path: str | Path | None = None) -> list[CatalogEntry]:
    if path is None:
        text = resources.files("genant").joinpath("catalog.txt").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_catalog(text)


def classify(report: HighwayReport, catalog, rule) -> str:
    """Catalog name matching rule, period, drift magnitude and word class."""
    rule = as_rule(rule)
    if report.drift == (0, 0):
        return "cycle"
    mag = tuple(sorted((abs(report.drift[0]), abs(report.drift[1]))))
    word = word_str(canonical_rotation(word_symbols(report.word)))
    for entry in catalog:
        if entry.rule != rule or entry.period != report.period:
            continue
        if entry.drift_magnitude is not None and tuple(sorted(entry.drift_magnitude)) != mag:
            continue
        if entry.word_class is not None and entry.word_class != word:
            continue
        return entry.name
    return f"unknown(period={report.period})"
