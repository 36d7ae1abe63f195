"""Compare results on the original 100-method corpus with the reference numbers.

Point MRPRED_REFERENCE_CORPUS at a directory laid out like the bundled
corpus (java/ sources plus labels.csv), or pass --corpus. The script mines
and labels it, then checks the label counts, the RF top-12 ADD row
(tolerance 0.10 per metric) and the qualitative outcomes of the baseline
comparison.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from pathlib import Path

from mrpred.analysis import replication_check
from mrpred.dataset import build_dataset, load_labels
from mrpred.miner.mine import mine_paths


def load_corpus(corpus: Path):
    pairs = mine_paths([corpus / "java"], recursive=True)
    metrics = [(m.method_id, v) for m, v in pairs]
    with open(corpus / "labels.csv", newline="", encoding="utf-8") as fh:
        labels = load_labels(fh)
    return build_dataset(metrics, labels)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--corpus", type=Path, default=os.environ.get("MRPRED_REFERENCE_CORPUS"))
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args(argv)
    if args.corpus is None:
        parser.error("set MRPRED_REFERENCE_CORPUS or pass --corpus")
    check = replication_check(load_corpus(Path(args.corpus)), seed=args.seed)
    buf = io.StringIO()
    json.dump({
        "label_counts": check.label_counts,
        "label_counts_match": check.label_counts_match,
        "add_rf_top12": check.add_rf_top12,
        "deltas": check.add_rf_deltas,
        "within_tolerance": check.within_tolerance,
        "outcomes": check.outcomes,
        "passed": check.passed,
    }, buf, indent=2)
    print(buf.getvalue())
    return 0 if check.passed else 1


if __name__ == "__main__":
    sys.exit(main())
