"""Five binary classifiers with seeded, reproducible training."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field, replace
from enum import Enum
from typing import Sequence

import numpy as np

from ..dataset import Dataset, MRKind
from ..errors import DegenerateData, DimensionMismatch, Unsupported
from .linear import fit_linear_svm, fit_logistic, lr_gradient, lr_objective, sigmoid, svm_objective
from .tree import Tree, fit_tree, index_keys


class ClassifierKind(str, Enum):
    RF = "RF"
    DT = "DT"
    GNB = "GNB"
    SVM_LINEAR = "SVM_LINEAR"
    LR = "LR"

    @classmethod
    def parse(cls, text: str) -> "ClassifierKind":
        key = text.strip().lower()
        if key in _CLI_NAMES:
            return _CLI_NAMES[key]
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise ValueError(
                f"unknown classifier {text!r}; expected one of {', '.join(_CLI_NAMES)}"
            ) from None

    @property
    def cli_name(self) -> str:
        return {v: k for k, v in _CLI_NAMES.items()}[self]


_CLI_NAMES = {
    "rf": ClassifierKind.RF,
    "dt": ClassifierKind.DT,
    "gnb": ClassifierKind.GNB,
    "svm": ClassifierKind.SVM_LINEAR,
    "lr": ClassifierKind.LR,
}
SCALED_KINDS = frozenset([ClassifierKind.GNB, ClassifierKind.SVM_LINEAR, ClassifierKind.LR])


@dataclass(frozen=True)
class HyperParams:
    rf_trees: int = 100
    rf_features_per_split: int | str = "sqrt"
    dt_max_depth: int | None = None
    dt_min_split: int = 2
    gnb_var_smoothing: float = 1e-9
    svm_c: float = 1.0
    svm_max_iter: int = 10000
    lr_l2: float = 1.0
    lr_tol: float = 1e-6
    lr_max_iter: int = 1000
    seed: int = 42

    def __post_init__(self):
        for name in ("rf_trees", "dt_min_split", "svm_max_iter", "lr_max_iter"):
            if int(getattr(self, name)) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.dt_max_depth is not None and self.dt_max_depth < 1:
            raise ValueError("dt_max_depth must be >= 1 or None")
        if self.rf_features_per_split != "sqrt" and int(self.rf_features_per_split) < 1:
            raise ValueError("rf_features_per_split must be 'sqrt' or >= 1")
        for name in ("gnb_var_smoothing", "svm_c", "lr_l2", "lr_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0")

    def features_per_split(self, d: int) -> int:
        if self.rf_features_per_split == "sqrt":
            return max(1, math.isqrt(d))
        return min(d, int(self.rf_features_per_split))

    def with_seed(self, seed: int) -> "HyperParams":
        return replace(self, seed=int(seed))


@dataclass(frozen=True, eq=False)
class TrainedModel:
    kind: ClassifierKind
    params: HyperParams
    scaler: tuple[np.ndarray, np.ndarray] | None
    model_state: dict
    feature_names: tuple[str, ...]
    importances: np.ndarray | None = None
    converged: bool = True
    warnings: tuple[str, ...] = field(default_factory=tuple)

    @property
    def n_features(self) -> int:
        return len(self.feature_names)


# --- training -------------------------------------------------------------------

def fit_scaler(X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    mean = X.mean(axis=0)
    std = X.std(axis=0)
    std[std == 0] = 1.0
    return mean, std


def _apply_scaler(scaler, X):
    if scaler is None:
        return X
    mean, std = scaler
    return (X - mean) / std


def _normalise(v: np.ndarray) -> np.ndarray:
    total = v.sum()
    if total <= 0:
        raise DegenerateData("no split reduces impurity; features carry no signal")
    return v / total


def _fit_rf(X, y, p: HyperParams):
    n, d = X.shape
    rng = np.random.default_rng(p.seed)
    m_try = p.features_per_split(d)
    trees = []
    imp = np.zeros(d)
    for _ in range(p.rf_trees):
        # tree-major consumption: bootstrap draw, then the node feature keys
        boot = rng.integers(0, n, size=n)
        keys = rng.random((2 * n + 1, d))
        tree = fit_tree(X, y, boot, keys, m_try, p.dt_max_depth, p.dt_min_split)
        trees.append(tree)
        imp += tree.importance
    return {"trees": trees}, _normalise(imp)


def _fit_dt(X, y, p: HyperParams):
    n, d = X.shape
    tree = fit_tree(X, y, np.arange(n), index_keys(n, d), d, p.dt_max_depth, p.dt_min_split)
    return {"tree": tree}, _normalise(tree.importance.copy())


def _fit_gnb(Xs, y, p: HyperParams):
    eps = p.gnb_var_smoothing * float(Xs.var(axis=0).max())
    theta = np.vstack([Xs[y == c].mean(axis=0) for c in (0, 1)])
    var = np.vstack([Xs[y == c].var(axis=0) for c in (0, 1)]) + eps
    counts = np.array([(y == 0).sum(), (y == 1).sum()], dtype=np.float64)
    return {"theta": theta, "var": var, "log_prior": np.log(counts / counts.sum())}


def train_xy(kind, X, y, params: HyperParams, feature_names: Sequence[str]) -> TrainedModel:
    """Fit on a raw feature matrix; the dataset-level ``train`` wraps this."""
    kind = ClassifierKind(kind)
    X = np.ascontiguousarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.int64)
    if X.ndim != 2 or X.shape[0] != y.shape[0] or X.shape[1] != len(feature_names):
        raise DimensionMismatch("feature matrix, labels and feature names disagree")
    if X.shape[0] < 2 or len(np.unique(y)) < 2:
        raise DegenerateData("training data must contain both classes")
    if np.all(X.max(axis=0) == X.min(axis=0)):
        raise DegenerateData("all features are constant")
    scaler = fit_scaler(X) if kind in SCALED_KINDS else None
    Xs = _apply_scaler(scaler, X)
    importances = None
    converged = True
    notes: list[str] = []
    if kind is ClassifierKind.RF:
        state, importances = _fit_rf(X, y, params)
    elif kind is ClassifierKind.DT:
        state, importances = _fit_dt(X, y, params)
    elif kind is ClassifierKind.GNB:
        state = _fit_gnb(Xs, y, params)
    elif kind is ClassifierKind.LR:
        w, b, converged, iters = fit_logistic(Xs, y, params.lr_l2, params.lr_tol, params.lr_max_iter)
        state = {"w": w, "b": b, "iterations": iters}
        if not converged:
            notes.append(f"NonConvergence: logistic regression stopped after {iters} iterations")
    else:
        w, b, obj, checkpoints = fit_linear_svm(Xs, y, params.svm_c, params.svm_max_iter)
        state = {"w": w, "b": b, "objective": obj, "checkpoints": checkpoints}
    return TrainedModel(kind, params, scaler, state, tuple(feature_names), importances,
                        converged, tuple(notes))


def train(kind, ds: Dataset, mr: MRKind, params: HyperParams | None = None) -> TrainedModel:
    return train_xy(kind, ds.rows, ds.y(mr), params or HyperParams(), ds.feature_names)


# --- prediction ---------------------------------------------------------------------

def predict_scores(model: TrainedModel, X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != model.n_features:
        raise DimensionMismatch(
            f"expected {model.n_features} features, got {X.shape[-1] if X.ndim else 0}"
        )
    st = model.model_state
    kind = model.kind
    if kind is ClassifierKind.RF:
        return np.mean([t.predict(X) for t in st["trees"]], axis=0)
    if kind is ClassifierKind.DT:
        return st["tree"].predict(X)
    Xs = _apply_scaler(model.scaler, X)
    if kind is ClassifierKind.GNB:
        return _gnb_posterior(st, Xs)[:, 1]
    if kind is ClassifierKind.LR:
        return sigmoid(Xs @ st["w"] + st["b"])
    return Xs @ st["w"] + st["b"]


def _gnb_posterior(state, Xs) -> np.ndarray:
    theta, var, log_prior = state["theta"], state["var"], state["log_prior"]
    jll = np.empty((Xs.shape[0], 2))
    for c in (0, 1):
        jll[:, c] = log_prior[c] - 0.5 * np.sum(
            np.log(2.0 * np.pi * var[c]) + (Xs - theta[c]) ** 2 / var[c], axis=1
        )
    norm = np.logaddexp(jll[:, 0], jll[:, 1])
    return np.exp(jll - norm[:, None])


def gnb_posterior(model: TrainedModel, X: np.ndarray) -> np.ndarray:
    if model.kind is not ClassifierKind.GNB:
        raise Unsupported("posterior pairs are only defined for GNB")
    return _gnb_posterior(model.model_state, _apply_scaler(model.scaler, np.asarray(X, float)))


def predict_score(model: TrainedModel, row) -> float:
    row = np.asarray(row, dtype=np.float64)
    if row.ndim != 1:
        raise DimensionMismatch("a single feature vector is expected")
    return float(predict_scores(model, row[None, :])[0])


def default_threshold(kind: ClassifierKind) -> float:
    return 0.0 if ClassifierKind(kind) is ClassifierKind.SVM_LINEAR else 0.5


def predict_labels(model: TrainedModel, X, threshold: float | None = None) -> np.ndarray:
    thr = default_threshold(model.kind) if threshold is None else threshold
    return (predict_scores(model, X) >= thr).astype(np.int64)


def predict_label(model: TrainedModel, row, threshold: float | None = None) -> int:
    """Scores at or above the threshold are positive."""
    thr = default_threshold(model.kind) if threshold is None else threshold
    return int(predict_score(model, row) >= thr)


def feature_importances(model: TrainedModel) -> np.ndarray:
    if model.kind not in (ClassifierKind.RF, ClassifierKind.DT) or model.importances is None:
        raise Unsupported(f"{model.kind.value} has no impurity-based importances")
    return model.importances.copy()


# --- serialization ------------------------------------------------------------------

def _state_to_json(kind: ClassifierKind, st: dict) -> dict:
    if kind is ClassifierKind.RF:
        return {"trees": [t.to_json() for t in st["trees"]]}
    if kind is ClassifierKind.DT:
        return {"tree": st["tree"].to_json()}
    return {k: (v.tolist() if isinstance(v, np.ndarray) else v) for k, v in st.items()}


def _state_from_json(kind: ClassifierKind, st: dict) -> dict:
    if kind is ClassifierKind.RF:
        return {"trees": [Tree.from_json(t) for t in st["trees"]]}
    if kind is ClassifierKind.DT:
        return {"tree": Tree.from_json(st["tree"])}
    out = {}
    for k, v in st.items():
        out[k] = np.asarray(v, dtype=np.float64) if isinstance(v, list) else v
    return out


def model_to_json(model: TrainedModel) -> str:
    doc = {
        "kind": model.kind.value,
        "params": asdict(model.params),
        "scaler": None if model.scaler is None else [a.tolist() for a in model.scaler],
        "feature_names": list(model.feature_names),
        "model_state": _state_to_json(model.kind, model.model_state),
        "importances": None if model.importances is None else model.importances.tolist(),
        "converged": model.converged,
        "warnings": list(model.warnings),
    }
    return json.dumps(doc, sort_keys=True)


def model_from_json(text: str) -> TrainedModel:
    doc = json.loads(text)
    kind = ClassifierKind(doc["kind"])
    scaler = None
    if doc["scaler"] is not None:
        scaler = tuple(np.asarray(a, dtype=np.float64) for a in doc["scaler"])
    imp = doc.get("importances")
    return TrainedModel(
        kind=kind,
        params=HyperParams(**doc["params"]),
        scaler=scaler,
        model_state=_state_from_json(kind, doc["model_state"]),
        feature_names=tuple(doc["feature_names"]),
        importances=None if imp is None else np.asarray(imp, dtype=np.float64),
        converged=doc.get("converged", True),
        warnings=tuple(doc.get("warnings", ())),
    )


__all__ = [
    "ClassifierKind",
    "HyperParams",
    "TrainedModel",
    "default_threshold",
    "feature_importances",
    "fit_scaler",
    "gnb_posterior",
    "lr_gradient",
    "lr_objective",
    "model_from_json",
    "model_to_json",
    "predict_label",
    "predict_labels",
    "predict_score",
    "predict_scores",
    "svm_objective",
    "train",
    "train_xy",
]
