"""Run several seeds of one configuration and summarize the final scores.

    python scripts/run_search.py configs/degree2_cycle.cfg --seeds 0-9 --out runs/
"""
import argparse
import json
import statistics
import sys
from dataclasses import replace
from pathlib import Path

from dynforge.config import parse_config
from dynforge.ga import run


def seed_range(text):
    lo, _, hi = text.partition("-")
    return range(int(lo), int(hi or lo) + 1)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("config")
    ap.add_argument("--seeds", type=seed_range, default=range(1))
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", type=Path, help="directory for one JSON report per seed")
    args = ap.parse_args()
    cfg = parse_config(args.config)
    cache: dict = {}
    finals = []
    for seed in args.seeds:
        report = run(replace(cfg, seed=seed), threads=args.threads, cache=cache)
        best = report.best
        finals.append(best.score.value)
        print(f"seed {seed}: {report.status} best {best.score.value:.6g} at {list(best.orbit.entries)}"
              f" (gen {best.generation}, {report.wall_time:.1f}s)")
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"seed{seed}.json").write_text(json.dumps(report.to_json(), indent=1))
    print(f"median final best {statistics.median(finals):.6g} over {len(finals)} seeds")
    return 0


if __name__ == "__main__":
    sys.exit(main())
