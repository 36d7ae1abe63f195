"""Run mine -> label -> rank -> sweep -> grid -> report on a labeled corpus.

    python scripts/run_pipeline.py --corpus corpus --out runs/synthetic --seed 42

The corpus directory must hold Java sources under java/ and a labels.csv
whose method ids match what `mrpred mine <corpus>/java` produces.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from mrpred.cli import run


def pipeline(corpus: Path, out: Path, seed: int) -> list[tuple[str, float]]:
    out.mkdir(parents=True, exist_ok=True)
    s = ["--seed", str(seed)]
    steps = [
        ("mine", ["mine", str(corpus / "java"), "--recursive", "--out", str(out / "metrics.csv")]),
        ("label", ["label", "--metrics", str(out / "metrics.csv"), "--labels", str(corpus / "labels.csv"),
                   "--out", str(out / "dataset.csv")]),
        ("rank", ["rank", "--dataset", str(out / "dataset.csv"), *s, "--out", str(out / "importance.json")]),
        ("sweep", ["sweep", "--dataset", str(out / "dataset.csv"), *s, "--out", str(out / "sweep.json")]),
        ("grid", ["grid", "--dataset", str(out / "dataset.csv"), *s, "--out", str(out / "grid.json")]),
        ("report", ["report", "--grid", str(out / "grid.json"), "--importance", str(out / "importance.json"),
                    "--out", str(out / "report.md")]),
    ]
    timings = []
    for name, argv in steps:
        t0 = time.perf_counter()
        code = run(argv)
        timings.append((name, time.perf_counter() - t0))
        if code != 0:
            raise SystemExit(f"step {name} failed with exit code {code}")
    return timings


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description="End-to-end pipeline on a labeled corpus.")
    parser.add_argument("--corpus", type=Path, default=Path("corpus"))
    parser.add_argument("--out", type=Path, default=Path("runs") / "synthetic")
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args(argv)
    timings = pipeline(args.corpus, args.out, args.seed)
    for name, secs in timings:
        print(f"{name:7s} {secs:7.2f}s")
    print(f"total   {sum(t for _, t in timings):7.2f}s -> {args.out}")


if __name__ == "__main__":
    sys.exit(main())
