#!/usr/bin/env python3
"""Write PPM snapshots in the style of the classic highway figures.

  lr_13000.ppm          Langton's ant after 13,000 steps from the uniform grid
  lllr_105.ppm          LLLR when it has just entered the period-52 highway
  lllr_313.ppm          ... four periods later
  <seed>_start/_4p.ppm  for each pattern file given with --seeds

Convert with e.g. ``magick lllr_313.ppm lllr_313.png``.
"""

import argparse
from pathlib import Path

from genant.analysis import detect_highway, load_catalog, classify
from genant.core import AntConfiguration, apply_pattern
from genant.engine import fast_run
from genant.patterns import load_pattern
from genant.render import Palette, render_bitmap


def snapshot(config, steps, path, scale):
    final, _, _ = fast_run(config, steps)
    palette = Palette.default(config.rule.m, outline_origin=True)
    path.write_bytes(render_bitmap(final, None, scale, palette))
    print(f"{path}  ({steps} steps, {len(final.grid)} non-background cells)")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures")
    ap.add_argument("--scale", type=int, default=6)
    ap.add_argument("--seeds", nargs="*", default=[], help="pattern files (LLLR)")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    snapshot(AntConfiguration.uniform("LR"), 13_000, out / "lr_13000.ppm", max(1, args.scale // 3))
    snapshot(AntConfiguration.uniform("LLLR"), 105, out / "lllr_105.ppm", args.scale)
    snapshot(AntConfiguration.uniform("LLLR"), 105 + 4 * 52, out / "lllr_313.ppm", args.scale)

    catalog = load_catalog()
    for seed in args.seeds:
        config = apply_pattern(0, load_pattern(seed, 4), "LLLR")
        _, trace, traj = fast_run(config, 20_000)
        report = detect_highway(trace, traj)
        if report is None:
            print(f"{seed}: no highway within 20,000 steps")
            continue
        stem = Path(seed).stem
        print(f"{seed}: {classify(report, catalog, 'LLLR')} entry={report.entry_step}")
        snapshot(config, 0, out / f"{stem}_start.ppm", args.scale)
        snapshot(config, report.entry_step + 4 * report.period, out / f"{stem}_4p.ppm",
                 args.scale)


if __name__ == "__main__":
    main()
