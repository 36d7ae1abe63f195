"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the lines are repeated in
the "acceptance criteria" section of the terminal summary.
"""

import json
import os
import time
from contextlib import contextmanager
from pathlib import Path

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from mrpred.analysis import (
    compare_baseline,
    qualitative_outcomes,
    rank_features,
    reference_grid,
    replication_check,
)
from mrpred.cli import run
from mrpred.dataset import MR_ORDER, Dataset, build_dataset, load_dataset_path, load_labels
from mrpred.eval import ConfusionCounts, auc_roc, cross_validate, make_folds, scalar_metrics
from mrpred.learn import ClassifierKind, HyperParams, lr_gradient, lr_objective
from mrpred.miner import compute_ccn
from mrpred.miner.lexer import SourceFile
from mrpred.miner.mine import mine_paths
from mrpred.miner.segment import segment_methods
from oracles import auc_pairs, ccn_from_source

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = Path(__file__).parent / "fixtures" / "golden"
CORPUS = ROOT / "corpus"


@contextmanager
def criterion(number: int, summary: str):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        line = f"FAIL criterion {number}: {summary} ({type(exc).__name__}: {exc})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    line = f"PASS criterion {number}: {summary} [{time.perf_counter() - t0:.2f}s]"
    ACCEPTANCE_LINES.append(line)
    print(line)


def _dataset(X, y):
    n, d = X.shape
    labels = np.zeros((n, len(MR_ORDER)), dtype=np.int64)
    labels[:, 0] = y
    return Dataset(tuple(f"f{i}" for i in range(d)), X, labels, tuple(f"m{i}" for i in range(n)), {})


def test_criterion_01_metric_golden_suite():
    with criterion(1, "golden metric suite matches hand-computed values exactly in < 1 s"):
        rows = json.loads((GOLDEN / "expected_metrics.json").read_text())
        exts = [r["ext"] for r in rows]
        assert exts.count("java") >= 25 and exts.count("python") >= 5 and exts.count("cpp") >= 5
        t0 = time.perf_counter()
        pairs = mine_paths([GOLDEN / "java", GOLDEN / "python", GOLDEN / "cpp"])
        got = {(m.method_id.split("::")[0], m.start_line): v.as_row() for m, v in pairs}
        elapsed = time.perf_counter() - t0
        assert len(got) == len(rows)
        mismatches = []
        for row in rows:
            expected = {k: v for k, v in row.items() if k not in ("file", "name")}
            actual = got[(row["file"], row["start_line"])]
            mismatches += [(row["name"], k) for k in expected if actual[k] != expected[k]]
        assert not mismatches, mismatches
        assert elapsed < 1.0, f"{elapsed:.3f}s"


def test_criterion_02_ccn_oracle():
    with criterion(2, "CCN equals 1 + brute-force decision count on 20+ fixture methods"):
        checked = 0
        for path in sorted(p for p in GOLDEN.rglob("*.*") if p.suffix != ".json"):
            f = SourceFile.from_path(path)
            for m in segment_methods(f):
                span = "\n".join(f.lines[m.start_line - 1:m.end_line])
                assert compute_ccn(m) == ccn_from_source(span, f.language), m.method_id
                checked += 1
        assert checked >= 20


def test_criterion_03_auc_oracle():
    with criterion(3, "AUC equals pairwise Mann-Whitney on 1000 vectors within 1e-12 in < 5 s"):
        rng = np.random.default_rng(2024)
        t0 = time.perf_counter()
        done = 0
        while done < 1000:
            n = int(rng.integers(2, 51))
            truth = rng.integers(0, 2, n)
            if truth.min() == truth.max():
                continue
            scores = np.round(rng.random(n), int(rng.integers(1, 4)))
            assert abs(auc_roc(scores, truth) - auc_pairs(scores, truth)) <= 1e-12
            done += 1
        assert time.perf_counter() - t0 < 5.0


CONFUSIONS = [
    # (tp, tn, fp, fn), accuracy, precision, recall, f1 as exact fractions
    ((3, 5, 1, 1), (8, 10), (3, 4), (3, 4), (6, 8)),
    ((0, 4, 0, 2), (4, 6), (0, 1), (0, 2), (0, 1)),
    ((5, 0, 5, 0), (5, 10), (5, 10), (5, 5), (10, 15)),
    ((0, 0, 3, 2), (0, 5), (0, 3), (0, 2), (0, 1)),
    ((10, 10, 0, 0), (20, 20), (10, 10), (10, 10), (20, 20)),
    ((0, 7, 0, 0), (7, 7), (0, 1), (0, 1), (0, 1)),
    ((2, 3, 4, 1), (5, 10), (2, 6), (2, 3), (4, 9)),
    ((7, 1, 1, 3), (8, 12), (7, 8), (7, 10), (14, 18)),
    ((1, 0, 0, 0), (1, 1), (1, 1), (1, 1), (2, 2)),
    ((4, 2, 2, 4), (6, 12), (4, 6), (4, 8), (8, 14)),
]


def test_criterion_04_scalar_metric_formulas():
    with criterion(4, "scalar metrics exact on 10 enumerated confusion matrices"):
        for counts, acc, prec, rec, f1 in CONFUSIONS:
            got = scalar_metrics(ConfusionCounts(*counts))
            expected = {"accuracy": acc[0] / acc[1], "precision": prec[0] / prec[1],
                        "recall": rec[0] / rec[1], "f1": f1[0] / f1[1]}
            assert got == expected, (counts, got, expected)


def test_criterion_05_stratification():
    with criterion(5, "every fold within 1 of round(n_pos/k) for 500 configurations"):
        rng = np.random.default_rng(5)
        for _ in range(500):
            k = int(rng.integers(2, 21))
            n_pos = int(rng.integers(k, 300))
            n_neg = int(rng.integers(k, 300))
            y = rng.permutation(np.array([1] * n_pos + [0] * n_neg))
            a = np.asarray(make_folds(y, k, int(rng.integers(0, 2**31))).assignments)
            target = round(n_pos / k)
            for f in range(k):
                assert abs(int(y[a == f].sum()) - target) <= 1, (n_pos, n_neg, k, f)


def test_criterion_06_classifier_sanity():
    with criterion(6, "separable data AUC/acc >= 0.95 for all kinds; permuted RF AUC in [0.35, 0.65]; < 30 s"):
        t0 = time.perf_counter()
        rng = np.random.default_rng(6)
        X = rng.normal(size=(200, 5))
        y = (X[:, 0] > 0).astype(int)
        ds = _dataset(X, y)
        for kind in ClassifierKind:
            rep = cross_validate(ds, "ADD", kind, k=10, seed=6)
            assert rep.mean["auc_roc"] >= 0.95 and rep.mean["accuracy"] >= 0.95, kind
        for s in range(20):
            perm = _dataset(X, np.random.default_rng(100 + s).permutation(y))
            auc = cross_validate(perm, "ADD", "RF", k=10, seed=s).mean["auc_roc"]
            assert 0.35 <= auc <= 0.65, (s, auc)
        assert time.perf_counter() - t0 < 30.0


def test_criterion_07_lr_gradient():
    with criterion(7, "LR gradient matches central differences within 1e-4 at 100 points"):
        rng = np.random.default_rng(7)
        X = rng.normal(size=(60, 5))
        y = rng.integers(0, 2, 60)
        h = 1e-6
        for _ in range(100):
            w, b, l2 = rng.normal(size=5), float(rng.normal()), float(rng.uniform(0.01, 5))
            g, gb = lr_gradient(w, b, X, y, l2)
            for j in range(5):
                e = np.zeros(5)
                e[j] = h
                num = (lr_objective(w + e, b, X, y, l2) - lr_objective(w - e, b, X, y, l2)) / (2 * h)
                assert abs(num - g[j]) <= 1e-4 * max(1.0, abs(g[j]))
            num_b = (lr_objective(w, b + h, X, y, l2) - lr_objective(w, b - h, X, y, l2)) / (2 * h)
            assert abs(num_b - gb) <= 1e-4 * max(1.0, abs(gb))


def test_criterion_08_importance_property(pipeline):
    with criterion(8, "single informative feature scores 1.0, others < 0.1; one 1.0 per MR"):
        rng = np.random.default_rng(8)
        X = rng.normal(size=(150, 6))
        ranking = rank_features(_dataset(X, (X[:, 3] > 0).astype(int)), "ADD", runs=10, seed=8)
        assert ranking[0] == ("f3", 1.0)
        assert all(s < 0.1 for _, s in ranking[1:])
        doc = json.loads((pipeline["out"] / "importance.json").read_text())["importance"]
        for mr, rows in doc["per_mr"].items():
            scores = [s for _, s in rows]
            assert scores.count(1.0) == 1 and max(scores) == 1.0, mr


@pytest.fixture(scope="session")
def pipeline(tmp_path_factory):
    """mine -> label -> rank -> sweep -> grid -> report on the bundled corpus."""
    out = tmp_path_factory.mktemp("pipeline")
    steps = [
        ["mine", str(CORPUS / "java"), "--recursive", "--out", str(out / "metrics.csv")],
        ["label", "--metrics", str(out / "metrics.csv"), "--labels", str(CORPUS / "labels.csv"),
         "--out", str(out / "dataset.csv")],
        ["rank", "--dataset", str(out / "dataset.csv"), "--out", str(out / "importance.json")],
        ["sweep", "--dataset", str(out / "dataset.csv"), "--out", str(out / "sweep.json")],
        ["grid", "--dataset", str(out / "dataset.csv"), "--out", str(out / "grid.json")],
        ["report", "--grid", str(out / "grid.json"), "--importance", str(out / "importance.json"),
         "--out", str(out / "report.md")],
    ]
    t0 = time.perf_counter()
    codes = [run(argv) for argv in steps]
    return {"out": out, "codes": codes, "elapsed": time.perf_counter() - t0}


def _auc_cells(path: Path) -> dict:
    cells = json.loads(path.read_text())["grid"]["cells"]
    return {(c["mr"], c["classifier"], len(c["feature_subset"])): c["mean"]["auc_roc"] for c in cells}


def test_criterion_09_determinism(pipeline, tmp_path):
    with criterion(9, "grid byte-identical for one seed; per-cell AUC shift < 0.15 across seeds"):
        assert pipeline["codes"] == [0] * 6
        ds_path = pipeline["out"] / "dataset.csv"
        out = tmp_path / "grid.json"
        argv = ["grid", "--dataset", str(ds_path), "--seed", "7", "--out", str(out)]
        assert run(argv) == 0
        first = out.read_bytes()
        assert run(argv) == 0
        assert out.read_bytes() == first
        a, b = _auc_cells(pipeline["out"] / "grid.json"), _auc_cells(out)
        assert a.keys() == b.keys() and len(a) == 90
        worst = max(abs(a[key] - b[key]) for key in a)
        assert worst < 0.15, worst


def test_criterion_10_reference_replication():
    corpus = os.environ.get("MRPRED_REFERENCE_CORPUS")
    scope = "original corpus supplied" if corpus else "no original corpus; embedded numbers only"
    with criterion(10, f"reference replication ({scope})"):
        outcomes = qualitative_outcomes(compare_baseline(reference_grid()))
        assert all(outcomes.values()), outcomes
        if corpus:
            root = Path(corpus)
            pairs = mine_paths([root / "java"], recursive=True)
            with open(root / "labels.csv", newline="", encoding="utf-8") as fh:
                labels = load_labels(fh)
            check = replication_check(build_dataset([(m.method_id, v) for m, v in pairs], labels))
            assert check.label_counts_match, check.label_counts
            assert check.within_tolerance, check.add_rf_deltas
            assert all(check.outcomes.values()), check.outcomes


def test_criterion_11_end_to_end(pipeline):
    with criterion(11, "pipeline completes in < 2 min and emits all report artifacts with seeds"):
        out = pipeline["out"]
        assert pipeline["codes"] == [0] * 6
        assert pipeline["elapsed"] < 120.0, pipeline["elapsed"]
        for name in ("importance.json", "sweep.json", "grid.json"):
            doc = json.loads((out / name).read_text())
            assert doc["provenance"]["seed"] == 42 and doc["provenance"]["version"]
        assert json.loads((out / "importance.json").read_text())["importance"]["seed"] == 42
        assert all(s["seed"] == 42 for s in json.loads((out / "sweep.json").read_text())["sweeps"])
        assert json.loads((out / "grid.json").read_text())["grid"]["seed"] == 42
        report = (out / "report.md").read_text()
        assert "| seed | `42` |" in report and "| grid seed | `42` |" in report
        meta = json.loads((out / "report.baseline.csv.meta.json").read_text())
        assert meta["provenance"]["seed"] == 42 and meta["grid_seed"] == 42
        ds = load_dataset_path(out / "dataset.csv")
        assert ds.n == len((CORPUS / "labels.csv").read_text().splitlines()) - 1
