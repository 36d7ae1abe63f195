import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mrpred.analysis import (
    GridResult,
    ImportanceTable,
    SweepResult,
    baseline_series_csv,
    cell_seed,
    compare_baseline,
    grid_evaluate,
    importance_table,
    rank_features,
    reference_grid,
    render_markdown,
    round2,
    sweep_subsets,
)
from mrpred.dataset import MR_ORDER, Dataset, MRKind
from mrpred.errors import MissingCell
from mrpred.eval import cross_validate
from mrpred.learn import ClassifierKind, HyperParams

FAST = HyperParams(rf_trees=20, svm_max_iter=1000)


def _dataset(X, Y):
    n, d = X.shape
    Y = np.asarray(Y).reshape(n, -1)
    labels = np.zeros((n, len(MR_ORDER)), dtype=np.int64)
    labels[:, : Y.shape[1]] = Y
    for j in range(Y.shape[1], len(MR_ORDER)):
        labels[:, j] = Y[:, 0]
    return Dataset(tuple(f"f{i}" for i in range(d)), X, labels, tuple(f"m{i}" for i in range(n)), {})


def test_single_informative_feature_ranks_first():
    rng = np.random.default_rng(0)
    X = rng.normal(size=(150, 6))
    ds = _dataset(X, (X[:, 0] > 0).astype(int))
    ranking = rank_features(ds, MRKind.ADD, runs=3, seed=1, params=FAST)
    assert ranking[0] == ("f0", 1.0)
    assert all(score < 0.1 for _, score in ranking[1:])


def test_importance_table_structure():
    rng = np.random.default_rng(1)
    X = rng.normal(size=(120, 5))
    Y = np.stack([(X[:, j] + 0.3 * rng.normal(size=120) > 0) for j in range(5)] + [X[:, 0] > 0.5], 1)
    ds = _dataset(X, Y.astype(int))
    table = importance_table(ds, runs=2, seed=3, params=FAST)
    for mr, rows in table.per_mr.items():
        scores = [s for _, s in rows]
        assert scores == sorted(scores, reverse=True)
        assert scores.count(1.0) == 1 and max(scores) == 1.0
    for name, avg in table.avg_row:
        mean = np.mean([dict(rows)[name] for rows in table.per_mr.values()])
        assert abs(avg - mean) < 1e-12
    assert ImportanceTable.from_json(table.to_json()) == table


def test_ranking_is_deterministic_and_stable_across_seeds():
    rng = np.random.default_rng(2)
    X = rng.normal(size=(100, 8))
    y = (X[:, 0] + 0.7 * X[:, 1] + 0.4 * X[:, 2] > 0).astype(int)
    ds = _dataset(X, y)
    a = rank_features(ds, "ADD", runs=5, seed=10, params=FAST)
    assert a == rank_features(ds, "ADD", runs=5, seed=10, params=FAST)
    b = rank_features(ds, "ADD", runs=5, seed=99, params=FAST)
    ra = {n: i for i, (n, _) in enumerate(a)}
    rb = {n: i for i, (n, _) in enumerate(b)}
    d2 = sum((ra[n] - rb[n]) ** 2 for n in ra)
    m = len(ra)
    assert 1 - 6 * d2 / (m * (m * m - 1)) >= 0.8


def test_sweep_three_informative_features():
    rng = np.random.default_rng(3)
    X = rng.normal(size=(200, 21))
    y = (((X[:, 0] > 0) & (X[:, 1] > -0.5)) | (X[:, 2] > 1.0)).astype(int)
    ds = _dataset(X, y)
    params = HyperParams()
    ranking = rank_features(ds, "ADD", runs=2, seed=0, params=params)
    assert {n for n, _ in ranking[:3]} == {"f0", "f1", "f2"}
    sweep = sweep_subsets(ds, "ADD", ranking, seed=4, params=params)
    assert sweep.subset_sizes == (3, 6, 9, 12, 15, 18, 21)
    assert abs(sweep.auc_by_size[3] - sweep.auc_by_size[21]) <= 0.02
    full = cross_validate(ds, "ADD", "RF", params, [n for n, _ in ranking], 10, 4)
    assert sweep.auc_by_size[21] == full.mean["auc_roc"]
    assert sweep.precision_by_size[21] == full.mean["precision"]
    assert SweepResult.from_json(sweep.to_json()) == sweep


def test_sweep_rejects_incomplete_ranking():
    rng = np.random.default_rng(0)
    X = rng.normal(size=(40, 3))
    ds = _dataset(X, (X[:, 0] > 0).astype(int))
    with pytest.raises(ValueError):
        sweep_subsets(ds, "ADD", ["f0", "f1"], seed=1)


def test_grid_on_separable_data():
    rng = np.random.default_rng(4)
    X = rng.normal(size=(120, 2))
    ds = _dataset(X, (X[:, 0] > 0).astype(int))
    rankings = {mr: ["f0", "f1"] for mr in MR_ORDER[:2]}
    grid = grid_evaluate(ds, rankings, sizes=(1, 2), k=5, seed=7, params=FAST)
    assert len(grid.reports) == 2 * 5 * 2
    assert all(r.mean["accuracy"] >= 0.95 for r in grid.reports)
    assert grid.cell("ADD", "LR", 2).seed == cell_seed(7, MRKind.ADD, ClassifierKind.LR, 2)
    assert GridResult.from_json(grid.to_json()).to_json() == grid.to_json()


def test_grid_oversized_cells_become_warnings():
    rng = np.random.default_rng(5)
    X = rng.normal(size=(60, 2))
    ds = _dataset(X, (X[:, 1] > 0).astype(int))
    grid = grid_evaluate(ds, {MRKind.ADD: ["f1", "f0"]}, sizes=(1, 3), kinds=["LR"], k=5, seed=1)
    assert len(grid.reports) == 1 and len(grid.warnings) == 1


def test_cell_seed_stable():
    assert cell_seed(42, MRKind.ADD, ClassifierKind.RF, 12) == cell_seed(42, "ADD", "RF", 12)
    seeds = {cell_seed(42, mr, k, n) for mr in MR_ORDER for k in ClassifierKind for n in (3, 12, 21)}
    assert len(seeds) == 90


def test_compare_baseline_on_reference_numbers():
    rows = {r.mr: r for r in compare_baseline(reference_grid())}
    assert rows[MRKind.INV].winner == "ours"
    assert rows[MRKind.INV].best_ours == (ClassifierKind.SVM_LINEAR, 0.86)
    assert rows[MRKind.MUL].winner == "tie"
    assert rows[MRKind.MUL].ours[ClassifierKind.LR] == 0.83
    assert rows[MRKind.PER].winner == "baseline"
    assert max(rows[MRKind.PER].ours.values()) == 0.86
    rwk_best = [mr for mr, r in rows.items() if r.best_baseline[0] == "rwk_svm"]
    assert len(rwk_best) == 5 and MRKind.INV not in rwk_best
    assert sum(r.winner == "baseline" for r in rows.values()) == 4


def test_compare_baseline_missing_cell():
    grid = [r for r in reference_grid() if r.mr is not MRKind.PER]
    with pytest.raises(MissingCell):
        compare_baseline(grid)


def test_compare_baseline_does_not_mutate():
    grid = reference_grid()
    before = [r.to_json() for r in grid]
    compare_baseline(grid)
    assert [r.to_json() for r in grid] == before


@pytest.mark.parametrize("x, expected", [(0.885, 0.89), (0.8849, 0.88), (0.125, 0.13), (0.857, 0.86)])
def test_round2_half_up(x, expected):
    assert round2(x) == expected


@settings(max_examples=50, deadline=None)
@given(st.floats(0, 1))
def test_round2_within_half_cent(x):
    assert abs(round2(x) - x) <= 0.005 + 1e-12


def test_rendering_contains_every_section():
    ref = reference_grid()
    grid = GridResult(ref, 0, (3, 12, 21), 10)
    md = render_markdown(grid, provenance={"seed": 0})
    assert "Classifier grid" in md and "baselines (n=12)" in md
    assert md.count("| INV |") >= 6
    csv_text = baseline_series_csv(compare_baseline(ref))
    lines = csv_text.strip().split("\n")
    assert lines[0].startswith("mr,NF-PF,GK,RWK")
    assert lines[-1].startswith("INV,0.84,0.68,0.76")
