"""Render the positivity regions for every preset (plus a diluted and an
infinite-scenario variant of the one-zero preset) as SVG and CSV.

    python3 scripts/reproduce_regions.py --out figures/
"""

import argparse
from pathlib import Path

from xipos.region_explorer import HypotheticalZeroSet, compute_region, export_grid, preset, unsatisfied_components


def runs():
    for name in ("one-zero", "five-zero", "no-zero"):
        zeros, s, t = preset(name)
        yield name, zeros, 1.0, s, t
    zeros, s, t = preset("one-zero")
    yield "one-zero-c0.4", zeros, 0.4, s, t
    yield "one-zero-infinite-c0.4", HypotheticalZeroSet(zeros.zeros, "infinite"), 0.4, s, t


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("figures"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, zeros, c, s, t in runs():
        grid = compute_region(zeros, c, s, t)
        for fmt in ("svg", "csv"):
            export_grid(grid, fmt, args.out / f"{name}.{fmt}")
        _, n = unsatisfied_components(grid)
        bad = int((~grid.satisfied).sum())
        print(f"{name:24s} c={c:<4g} unsatisfied cells {bad:5d} in {n} component(s)")


if __name__ == "__main__":
    main()
