import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mrpred.dataset import MR_ORDER, Dataset, MRKind
from mrpred.errors import FoldError, LengthMismatch, SingleClass
from mrpred.eval import (
    ConfusionCounts,
    auc_roc,
    confusion,
    cross_validate,
    make_folds,
    repeated_holdout,
    scalar_metrics,
)
from mrpred.learn import ClassifierKind, HyperParams
from oracles import auc_pairs


def _dataset(X, y):
    n, d = X.shape
    labels = np.zeros((n, len(MR_ORDER)), dtype=np.int64)
    labels[:, 0] = y
    return Dataset(tuple(f"f{i}" for i in range(d)), X, labels, tuple(f"m{i}" for i in range(n)), {})


def test_folds_add_example():
    y = [1] * 56 + [0] * 44
    plan = make_folds(y, 10, seed=1)
    a = np.asarray(plan.assignments)
    for f in range(10):
        members = a == f
        assert members.sum() == 10
        assert np.asarray(y)[members].sum() in (5, 6)


def test_folds_exact_division():
    y = [1] * 5 + [0] * 5
    a = np.asarray(make_folds(y, 5, seed=0).assignments)
    for f in range(5):
        assert sorted(np.asarray(y)[a == f]) == [0, 1]


def test_fold_error():
    with pytest.raises(FoldError):
        make_folds([1, 1, 0, 0, 0, 0], 4, 0)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 12), st.integers(0, 200), st.integers(0, 200), st.integers(0, 2**32))
def test_fold_partition_property(k, extra_pos, extra_neg, seed):
    y = np.array([1] * (k + extra_pos) + [0] * (k + extra_neg))
    plan = make_folds(y, k, seed)
    a = np.asarray(plan.assignments)
    assert a.min() >= 0 and a.max() < k and len(a) == len(y)
    target = round(y.sum() / k)
    for f in range(k):
        assert abs(int(y[a == f].sum()) - target) <= 1
    assert plan == make_folds(y, k, seed)


def test_confusion_examples():
    assert confusion([1, 0, 1], [1, 0, 1]) == ConfusionCounts(tp=2, tn=1, fp=0, fn=0)
    assert confusion([1, 1], [0, 0]).fp == 2
    assert confusion([0, 1, 0, 1], [1, 1, 0, 0]) == ConfusionCounts(tp=1, tn=1, fp=1, fn=1)
    with pytest.raises(LengthMismatch):
        confusion([1], [1, 0])


def test_scalar_metrics_examples():
    m = scalar_metrics(ConfusionCounts(tp=3, tn=5, fp=1, fn=1))
    assert m == {"accuracy": 0.8, "precision": 0.75, "recall": 0.75, "f1": 0.75}
    assert scalar_metrics(ConfusionCounts(tp=0, tn=4, fp=0, fn=2))["precision"] == 0.0
    assert scalar_metrics(confusion([1, 0, 1], [1, 0, 1])) == {
        "accuracy": 1.0, "precision": 1.0, "recall": 1.0, "f1": 1.0}


def test_auc_examples():
    assert auc_roc([0.9, 0.8, 0.3, 0.1], [1, 1, 0, 0]) == 1.0
    assert auc_roc([0.5, 0.5], [1, 0]) == 0.5
    assert auc_roc([0.9, 0.4, 0.6, 0.2], [1, 0, 1, 0]) == 1.0
    assert auc_roc([0.9, 0.6, 0.4, 0.2], [1, 0, 1, 0]) == 0.75
    with pytest.raises(SingleClass):
        auc_roc([0.1, 0.2], [1, 1])


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(0, 1)), min_size=2, max_size=40))
def test_auc_properties(pairs):
    scores = np.array([p[0] for p in pairs], dtype=float) / 2
    truth = np.array([p[1] for p in pairs])
    if truth.min() == truth.max():
        return
    a = auc_roc(scores, truth)
    assert abs(a - auc_pairs(scores, truth)) < 1e-12
    assert auc_roc(np.exp(scores), truth) == a
    if len(set(scores)) == len(scores):
        assert abs(a + auc_roc(-scores, truth) - 1) < 1e-12


@pytest.mark.parametrize("kind", list(ClassifierKind))
def test_cv_on_learnable_data(kind):
    rng = np.random.default_rng(0)
    X = rng.normal(size=(200, 5))
    rep = cross_validate(_dataset(X, (X[:, 2] > 0).astype(int)), MRKind.ADD, kind,
                         HyperParams(svm_max_iter=2000), k=10, seed=3)
    assert rep.mean["accuracy"] >= 0.95 and rep.mean["auc_roc"] >= 0.95
    assert len(rep.per_fold) == 10
    for m, v in rep.mean.items():
        assert abs(v - np.mean([getattr(f, m) for f in rep.per_fold])) < 1e-12
        assert all(0 <= getattr(f, m) <= 1 for f in rep.per_fold)


def test_cv_deterministic_and_subset():
    rng = np.random.default_rng(1)
    X = rng.normal(size=(80, 4))
    ds = _dataset(X, (X[:, 0] + 0.5 * rng.normal(size=80) > 0).astype(int))
    a = cross_validate(ds, "ADD", "RF", HyperParams(rf_trees=20), subset=["f0", "f3"], seed=5)
    b = cross_validate(ds, "ADD", "RF", HyperParams(rf_trees=20), subset=["f0", "f3"], seed=5)
    assert a.to_json() == b.to_json()
    assert a.feature_subset == ("f0", "f3")


def test_repeated_holdout():
    rng = np.random.default_rng(2)
    X = rng.normal(size=(100, 3))
    ds = _dataset(X, (X[:, 1] > 0).astype(int))
    rep = repeated_holdout(ds, "ADD", "LR", ratio=(70, 30), repeats=10, seed=4)
    assert len(rep.per_fold) == 10 and rep.mode == "holdout 70:30"
    assert rep.mean["auc_roc"] > 0.95
