"""Stratified cross-validation and the five performance measures."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .dataset import Dataset, MRKind, select_features
from .errors import DegenerateData, FoldError, LengthMismatch, SingleClass
from .learn import ClassifierKind, HyperParams, predict_labels, predict_scores, train_xy

METRIC_NAMES = ("accuracy", "precision", "recall", "f1", "auc_roc")


@dataclass(frozen=True)
class FoldPlan:
    k: int
    assignments: tuple[int, ...]
    seed: int

    def test_index(self, fold: int) -> np.ndarray:
        return np.flatnonzero(np.asarray(self.assignments) == fold)

    def train_index(self, fold: int) -> np.ndarray:
        return np.flatnonzero(np.asarray(self.assignments) != fold)


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    tn: int
    fp: int
    fn: int

    @property
    def total(self) -> int:
        return self.tp + self.tn + self.fp + self.fn


def make_folds(labels: Sequence[int], k: int = 10, seed: int = 42) -> FoldPlan:
    """Stratified assignment.

    Each class is shuffled with one generator (positives first), then dealt
    round-robin over the folds; negatives continue from the fold after the
    last positive so fold sizes stay balanced too.
    """
    y = np.asarray(labels, dtype=np.int64)
    if k < 2:
        raise FoldError(f"k must be at least 2, got {k}")
    pos = np.flatnonzero(y == 1)
    neg = np.flatnonzero(y == 0)
    if len(pos) + len(neg) != len(y):
        raise FoldError("labels must be 0 or 1")
    if len(pos) < k or len(neg) < k:
        raise FoldError(
            f"each class needs at least k={k} members (positives={len(pos)}, negatives={len(neg)})"
        )
    rng = np.random.default_rng(seed)
    pos = rng.permutation(pos)
    neg = rng.permutation(neg)
    fold = np.empty(len(y), dtype=np.int64)
    fold[pos] = np.arange(len(pos)) % k
    fold[neg] = (len(pos) + np.arange(len(neg))) % k
    return FoldPlan(k, tuple(int(f) for f in fold), seed)


def confusion(pred: Sequence[int], truth: Sequence[int]) -> ConfusionCounts:
    p = np.asarray(pred, dtype=np.int64)
    t = np.asarray(truth, dtype=np.int64)
    if p.shape != t.shape:
        raise LengthMismatch(f"{len(p)} predictions vs {len(t)} labels")
    return ConfusionCounts(
        tp=int(np.sum((p == 1) & (t == 1))),
        tn=int(np.sum((p == 0) & (t == 0))),
        fp=int(np.sum((p == 1) & (t == 0))),
        fn=int(np.sum((p == 0) & (t == 1))),
    )


def _ratio(a: int, b: int) -> float:
    return a / b if b else 0.0


def scalar_metrics(c: ConfusionCounts) -> dict[str, float]:
    """Accuracy, precision, recall and F1; any zero denominator yields 0.

    F1 uses 2tp / (2tp + fp + fn), equal to the harmonic mean of precision
    and recall but computed with a single rounding.
    """
    if c.total <= 0:
        raise ValueError("empty confusion matrix")
    precision = _ratio(c.tp, c.tp + c.fp)
    recall = _ratio(c.tp, c.tp + c.fn)
    f1 = _ratio(2 * c.tp, 2 * c.tp + c.fp + c.fn)
    return {
        "accuracy": (c.tp + c.tn) / c.total,
        "precision": precision,
        "recall": recall,
        "f1": f1,
    }


def auc_roc(scores: Sequence[float], truth: Sequence[int]) -> float:
    """Mann-Whitney statistic with ties counted as one half, computed exactly."""
    s = np.asarray(scores, dtype=np.float64)
    t = np.asarray(truth, dtype=np.int64)
    if s.shape != t.shape:
        raise LengthMismatch(f"{len(s)} scores vs {len(t)} labels")
    pos = s[t == 1]
    neg = np.sort(s[t == 0])
    if len(pos) == 0 or len(neg) == 0:
        raise SingleClass("AUC needs both classes")
    below = np.searchsorted(neg, pos, side="left")
    upto = np.searchsorted(neg, pos, side="right")
    wins2 = 2 * int(below.sum()) + int((upto - below).sum())
    return wins2 / (2 * len(pos) * len(neg))


@dataclass(frozen=True)
class FoldResult:
    fold: int
    accuracy: float
    precision: float
    recall: float
    f1: float
    auc_roc: float

    def as_dict(self) -> dict:
        return {"fold": self.fold, **{m: getattr(self, m) for m in METRIC_NAMES}}


@dataclass(frozen=True)
class EvalReport:
    mr: MRKind
    classifier: ClassifierKind
    feature_subset: tuple[str, ...]
    k: int
    seed: int
    per_fold: tuple[FoldResult, ...]
    mean: dict[str, float]
    warnings: tuple[str, ...] = ()
    mode: str = "kfold"
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        doc = {
            "mr": self.mr.value,
            "classifier": self.classifier.cli_name,
            "feature_subset": list(self.feature_subset),
            "k": self.k,
            "seed": self.seed,
            "mode": self.mode,
            "per_fold": [f.as_dict() for f in self.per_fold],
            "mean": dict(self.mean),
            "warnings": list(self.warnings),
        }
        doc.update(self.extra)
        return doc


def evaluate_split(model, X_test, y_test, fold: int) -> FoldResult:
    scores = predict_scores(model, X_test)
    labels = predict_labels(model, X_test)
    m = scalar_metrics(confusion(labels, y_test))
    return FoldResult(fold, m["accuracy"], m["precision"], m["recall"], m["f1"],
                      auc_roc(scores, y_test))


def _mean(results: list[FoldResult]) -> dict[str, float]:
    return {m: float(np.mean([getattr(r, m) for r in results])) for m in METRIC_NAMES}


def _run_splits(X, y, names, kind, params, splits, seed):
    results, warnings = [], []
    for i, (train_idx, test_idx) in enumerate(splits):
        try:
            model = train_xy(kind, X[train_idx], y[train_idx], params.with_seed(seed + i), names)
        except DegenerateData as exc:
            warnings.append(f"fold {i} skipped: {exc}")
            continue
        if not model.converged:
            warnings.extend(f"fold {i}: {w}" for w in model.warnings)
        results.append(evaluate_split(model, X[test_idx], y[test_idx], i))
    if not results:
        raise DegenerateData("every fold was skipped")
    if len(results) < len(splits):
        warnings.append(f"effective fold count {len(results)} of {len(splits)}")
    return results, warnings


def _prepare(ds: Dataset, subset):
    sub = ds if subset is None else select_features(ds, list(subset))
    return sub.rows, sub.feature_names


def cross_validate(
    ds: Dataset,
    mr: MRKind,
    kind: ClassifierKind,
    params: HyperParams | None = None,
    subset: Sequence[str] | None = None,
    k: int = 10,
    seed: int = 42,
) -> EvalReport:
    """Stratified k-fold CV; fold i trains with model seed ``seed + i``."""
    mr, kind = MRKind(mr), ClassifierKind(kind)
    params = params or HyperParams()
    X, names = _prepare(ds, subset)
    y = ds.y(mr)
    plan = make_folds(y, k, seed)
    splits = [(plan.train_index(f), plan.test_index(f)) for f in range(k)]
    results, warnings = _run_splits(X, y, names, kind, params, splits, seed)
    return EvalReport(mr, kind, tuple(names), k, seed, tuple(results), _mean(results),
                      tuple(warnings))


def holdout_splits(y: np.ndarray, test_share: float, repeats: int, seed: int):
    """Stratified random train/test splits, one generator per repeat (seed + r)."""
    pos = np.flatnonzero(y == 1)
    neg = np.flatnonzero(y == 0)
    n_pos_test = int(round(len(pos) * test_share))
    n_neg_test = int(round(len(neg) * test_share))
    if min(n_pos_test, n_neg_test) < 1 or n_pos_test >= len(pos) or n_neg_test >= len(neg):
        raise FoldError("holdout split leaves a class empty in train or test")
    out = []
    for r in range(repeats):
        rng = np.random.default_rng(seed + r)
        p, q = rng.permutation(pos), rng.permutation(neg)
        test = np.sort(np.concatenate([p[:n_pos_test], q[:n_neg_test]]))
        train = np.sort(np.concatenate([p[n_pos_test:], q[n_neg_test:]]))
        out.append((train, test))
    return out


def repeated_holdout(
    ds: Dataset,
    mr: MRKind,
    kind: ClassifierKind,
    params: HyperParams | None = None,
    subset: Sequence[str] | None = None,
    ratio: tuple[int, int] = (70, 30),
    repeats: int = 10,
    seed: int = 42,
) -> EvalReport:
    mr, kind = MRKind(mr), ClassifierKind(kind)
    params = params or HyperParams()
    if repeats < 1 or min(ratio) <= 0:
        raise FoldError("repeats and both ratio parts must be positive")
    X, names = _prepare(ds, subset)
    y = ds.y(mr)
    splits = holdout_splits(y, ratio[1] / sum(ratio), repeats, seed)
    results, warnings = _run_splits(X, y, names, kind, params, splits, seed)
    return EvalReport(mr, kind, tuple(names), repeats, seed, tuple(results), _mean(results),
                      tuple(warnings), mode=f"holdout {ratio[0]}:{ratio[1]}",
                      extra={"repeats": repeats, "ratio": f"{ratio[0]}:{ratio[1]}"})
