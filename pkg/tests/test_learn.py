import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mrpred.errors import DegenerateData, DimensionMismatch, Unsupported
from mrpred.learn import (
    ClassifierKind,
    HyperParams,
    TrainedModel,
    feature_importances,
    fit_scaler,
    gnb_posterior,
    lr_gradient,
    lr_objective,
    model_from_json,
    model_to_json,
    predict_label,
    predict_labels,
    predict_score,
    predict_scores,
    train_xy,
)
from mrpred.learn.tree import Tree

ALL = list(ClassifierKind)


def _names(d):
    return [f"f{i}" for i in range(d)]


def _separable(n=200, d=5, seed=0):
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(n, d))
    return X, (X[:, 0] > 0).astype(int)


@pytest.mark.parametrize("kind", ALL)
def test_one_dimensional_separable(kind):
    x = np.concatenate([np.linspace(-3, -0.1, 20), np.linspace(0.1, 3, 20)])
    y = (x > 0).astype(int)
    m = train_xy(kind, x[:, None], y, HyperParams(seed=1), ["x"])
    assert (predict_labels(m, x[:, None]) == y).all()


def test_gnb_means_match_sample_means():
    rng = np.random.default_rng(3)
    X = np.vstack([rng.normal(0, 1, (50, 2)), rng.normal(4, 2, (70, 2))])
    y = np.array([0] * 50 + [1] * 70)
    m = train_xy("GNB", X, y, HyperParams(), _names(2))
    mean, std = fit_scaler(X)
    Xs = (X - mean) / std
    for c in (0, 1):
        assert np.abs(m.model_state["theta"][c] - Xs[y == c].mean(axis=0)).max() < 1e-9
    post = gnb_posterior(m, X)
    assert np.abs(post.sum(axis=1) - 1).max() < 1e-12


def test_lr_gradient_vanishes_at_solution():
    X, y = _separable(seed=4)
    y = np.where(np.random.default_rng(1).random(len(y)) < 0.1, 1 - y, y)
    p = HyperParams(lr_tol=1e-6)
    m = train_xy("LR", X, y, p, _names(5))
    assert m.converged
    mean, std = m.scaler
    g, gb = lr_gradient(m.model_state["w"], m.model_state["b"], (X - mean) / std, y, p.lr_l2)
    assert np.sqrt(g @ g + gb * gb) <= p.lr_tol


def test_lr_gradient_matches_finite_differences():
    rng = np.random.default_rng(11)
    X = rng.normal(size=(40, 4))
    y = rng.integers(0, 2, 40)
    h = 1e-6
    for _ in range(20):
        w, b = rng.normal(size=4), float(rng.normal())
        g, gb = lr_gradient(w, b, X, y, 0.7)
        num = np.array([
            (lr_objective(w + h * e, b, X, y, 0.7) - lr_objective(w - h * e, b, X, y, 0.7)) / (2 * h)
            for e in np.eye(4)
        ])
        assert np.allclose(num, g, rtol=1e-4, atol=1e-6)
        nb = (lr_objective(w, b + h, X, y, 0.7) - lr_objective(w, b - h, X, y, 0.7)) / (2 * h)
        assert abs(nb - gb) <= 1e-4 * max(1.0, abs(gb))


def _manual(kind, state, d=2, scaler=None):
    return TrainedModel(ClassifierKind(kind), HyperParams(), scaler, state, tuple(_names(d)))


def test_lr_zero_weights_score_half():
    m = _manual("LR", {"w": np.zeros(2), "b": 0.0}, scaler=(np.zeros(2), np.ones(2)))
    assert predict_score(m, [5.0, -3.0]) == 0.5


def _leaf(v):
    i = np.array([-1])
    return Tree(i, np.zeros(1), i, i, np.array([v]), np.array([1]), np.zeros(2))


def test_rf_all_trees_positive():
    m = _manual("RF", {"trees": [_leaf(1.0)] * 100})
    assert predict_score(m, [0.0, 0.0]) == 1.0


def test_dt_leaf_fraction_on_training_rows():
    X, y = _separable(n=60)
    m = train_xy("DT", X, y, HyperParams(), _names(5))
    assert np.array_equal(predict_scores(m, X), y.astype(float))
    shallow = train_xy("DT", X, (X[:, 1] > 0.3).astype(int) ^ (X[:, 2] > 0).astype(int),
                       HyperParams(dt_max_depth=1), _names(5))
    scores = predict_scores(shallow, X)
    assert set(np.round(scores, 12)) <= set(np.round(shallow.model_state["tree"].value, 12))


def test_predict_label_thresholds():
    lr = _manual("LR", {"w": np.array([1.0, 0.0]), "b": 0.0}, scaler=(np.zeros(2), np.ones(2)))
    z = np.log(0.7 / 0.3)
    assert predict_label(lr, [z, 0.0]) == 1
    svm = _manual("SVM_LINEAR", {"w": np.array([1.0, 0.0]), "b": 0.0},
                  scaler=(np.zeros(2), np.ones(2)))
    assert predict_label(svm, [-0.3, 0.0]) == 0
    assert predict_label(svm, [0.0, 0.0]) == 1
    assert predict_label(lr, [0.0, 0.0]) == 1


def test_dimension_mismatch():
    X, y = _separable()
    m = train_xy("GNB", X, y, HyperParams(), _names(5))
    with pytest.raises(DimensionMismatch):
        predict_score(m, [1.0, 2.0])
    with pytest.raises(DimensionMismatch):
        predict_label(m, np.zeros(6))


def test_single_informative_feature_importance():
    X, y = _separable(seed=7)
    for kind in ("RF", "DT"):
        imp = feature_importances(train_xy(kind, X, y, HyperParams(), _names(5)))
        assert abs(imp.sum() - 1) < 1e-9
        assert (imp >= 0).all()
        norm = imp / imp.max()
        assert norm[0] == 1.0 and (norm[1:] < 0.1).all()


def test_duplicated_columns_share_importance():
    X, y = _separable(n=120, d=3, seed=2)
    y = np.where(X[:, 1] > 1.0, 1 - y, y)
    single = feature_importances(train_xy("DT", X, y, HyperParams(), _names(3)))
    Xd = np.hstack([X[:, :1], X])
    dup = feature_importances(train_xy("DT", Xd, y, HyperParams(), _names(4)))
    assert abs((dup[0] + dup[1]) - single[0]) < 1e-9


def test_importances_unsupported_for_linear():
    X, y = _separable()
    with pytest.raises(Unsupported):
        feature_importances(train_xy("LR", X, y, HyperParams(), _names(5)))


def test_degenerate_inputs():
    X, y = _separable()
    with pytest.raises(DegenerateData):
        train_xy("RF", X, np.ones_like(y), HyperParams(), _names(5))
    with pytest.raises(DegenerateData):
        train_xy("RF", np.ones_like(X), y, HyperParams(), _names(5))


def test_hyperparams_validation():
    with pytest.raises(ValueError):
        HyperParams(rf_trees=0)
    with pytest.raises(ValueError):
        HyperParams(svm_c=0.0)


@pytest.mark.parametrize("kind", ALL)
def test_determinism_and_json_round_trip(kind):
    X, y = _separable(n=80, seed=5)
    y = np.where(X[:, 3] > 1.2, 1 - y, y)
    a = train_xy(kind, X, y, HyperParams(seed=9, rf_trees=20), _names(5))
    b = train_xy(kind, X, y, HyperParams(seed=9, rf_trees=20), _names(5))
    assert model_to_json(a) == model_to_json(b)
    probe = np.random.default_rng(0).normal(size=(50, 5)) * 3
    loaded = model_from_json(model_to_json(a))
    assert np.array_equal(predict_scores(a, probe), predict_scores(loaded, probe))
    assert model_to_json(loaded) == model_to_json(a)


def test_svm_checkpoints_non_increasing():
    X, y = _separable(seed=8)
    y = np.where(np.random.default_rng(2).random(len(y)) < 0.15, 1 - y, y)
    m = train_xy("SVM_LINEAR", X, y, HyperParams(svm_max_iter=3000), _names(5))
    ck = m.model_state["checkpoints"]
    assert len(ck) == 30
    assert np.all(np.diff(ck) <= 0)
    assert m.model_state["objective"] <= ck[-1]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.integers(0, 4), st.floats(0.01, 1000))
def test_tree_label_invariance_to_feature_scaling(seed, col, factor):
    X, y = _separable(n=60, seed=seed)
    y = np.where(X[:, 2] > 0.8, 1 - y, y)
    Xc = X.copy()
    Xc[:, col] *= factor
    for kind in ("DT", "RF"):
        p = HyperParams(seed=seed, rf_trees=10)
        a = predict_labels(train_xy(kind, X, y, p, _names(5)), X)
        b = predict_labels(train_xy(kind, Xc, y, p, _names(5)), Xc)
        assert np.array_equal(a, b)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000), st.floats(0.1, 50), st.floats(-20, 20))
def test_scaled_kinds_invariant_to_affine_rescaling(seed, scale, shift):
    X, y = _separable(n=60, seed=seed)
    y = np.where(X[:, 2] > 0.8, 1 - y, y)
    Xc = X * scale + shift
    for kind in ("GNB", "LR", "SVM_LINEAR"):
        p = HyperParams(seed=seed, svm_max_iter=500)
        a = predict_scores(train_xy(kind, X, y, p, _names(5)), X)
        b = predict_scores(train_xy(kind, Xc, y, p, _names(5)), Xc)
        assert np.allclose(a, b, rtol=1e-6, atol=1e-6)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.integers(4, 40))
def test_unconstrained_dt_fits_training_data(seed, n):
    rng = np.random.default_rng(seed)
    X = rng.integers(0, 4, size=(n, 3)).astype(float)
    X, first = np.unique(X, axis=0, return_index=True)
    y = rng.integers(0, 2, len(X))
    if len(set(y)) < 2:
        return
    m = train_xy("DT", X, y, HyperParams(), _names(3))
    assert (predict_labels(m, X) == y).all()
