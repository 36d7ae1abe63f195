import io
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mrpred.dataset import (
    DATASET_COLUMNS,
    MR_ORDER,
    LabeledMethod,
    MRKind,
    build_dataset,
    dataset_csv_text,
    load_dataset,
    load_labels,
    load_metrics,
    select_features,
)
from mrpred.errors import JoinError, ParseError, SchemaError, UnknownFeature
from mrpred.miner import FEATURE_NAMES, metrics_csv_text, mine_paths

GOLDEN = Path(__file__).parent / "fixtures" / "golden"


@pytest.fixture(scope="module")
def mined():
    return mine_paths([GOLDEN / "java"])


@pytest.fixture(scope="module")
def metrics(mined):
    return load_metrics(io.StringIO(metrics_csv_text(mined)))


def _labels_for(ids, seed=0):
    rng = np.random.default_rng(seed)
    return [LabeledMethod(i, {mr: int(rng.integers(0, 2)) for mr in MR_ORDER}) for i in ids]


def test_metrics_round_trip(mined, metrics):
    assert [(m.method_id, v) for m, v in mined] == metrics


def test_missing_column_names_it(mined):
    text = metrics_csv_text(mined).replace(",numLoops,", ",", 1)
    with pytest.raises(SchemaError) as info:
        load_metrics(io.StringIO(text))
    assert info.value.column == "numLoops"


def test_bad_cell_reports_row_and_column(mined):
    lines = metrics_csv_text(mined).splitlines()
    cells = lines[2].split(",")
    cells[5] = "abc"  # tloc
    lines[2] = ",".join(cells)
    with pytest.raises(ParseError) as info:
        load_metrics(io.StringIO("\n".join(lines)))
    assert (info.value.row, info.value.column) == (2, "tloc")


def test_label_row_parsing():
    (lm,) = load_labels(io.StringIO("method_id,ADD,EXC,INC,MUL,PER,INV\nm1,1,0,0,1,0,1\n"))
    assert lm.labels == {MRKind.ADD: 1, MRKind.EXC: 0, MRKind.INC: 0, MRKind.MUL: 1,
                         MRKind.PER: 0, MRKind.INV: 1}


def test_label_value_two_is_value_error():
    with pytest.raises(ValueError):
        load_labels(io.StringIO("method_id,ADD,EXC,INC,MUL,PER,INV\nm1,2,0,0,1,0,1\n"))


def test_label_header_checked():
    with pytest.raises(SchemaError):
        load_labels(io.StringIO("method_id,ADD,EXC\nm1,1,0\n"))


def test_first_occurrence_encoding(metrics):
    ds = build_dataset(metrics, _labels_for([m for m, _ in metrics]))
    col = ds.column("dataArg")
    seen = []
    for mid, mv in metrics:
        if mv.dataArg not in seen:
            seen.append(mv.dataArg)
    assert [ds.decode("dataArg", int(c)) for c in col] == [mv.dataArg for _, mv in metrics]
    assert ds.encoders["dataArg"] == {v: i for i, v in enumerate(seen)}
    assert np.all(ds.column("ext") == 0)


def test_two_method_encoding(metrics):
    by_arg = {}
    for mid, mv in metrics:
        by_arg.setdefault(mv.dataArg, mid)
    ids = [by_arg["int[]"], by_arg["int[][],int"]]
    ds = build_dataset(metrics, _labels_for(ids))
    assert list(ds.column("dataArg")) == [0.0, 1.0]


def test_join_error_names_missing(metrics):
    labels = _labels_for([metrics[0][0], "nowhere.java::ghost#1"])
    with pytest.raises(JoinError, match="ghost"):
        build_dataset(metrics, labels)


def test_extras_dropped_with_warning(metrics):
    warnings = []
    ds = build_dataset(metrics, _labels_for([m for m, _ in metrics[:5]]), warnings)
    assert ds.n == 5 and len(warnings) == 1


def test_unseen_category_is_minus_one(metrics):
    ds = build_dataset(metrics[:3], _labels_for([m for m, _ in metrics[:3]]))
    novel = metrics[-1][1]
    row = ds.encode(novel)
    assert row[FEATURE_NAMES.index("returnDataType")] in (-1, *ds.encoders["returnDataType"].values())
    assert ds.encode(metrics[0][1]).tolist() == ds.rows[0].tolist()


def test_select_features(metrics):
    ds = build_dataset(metrics, _labels_for([m for m, _ in metrics]))
    assert select_features(ds, list(FEATURE_NAMES)).equals(ds)
    sub = select_features(ds, ["CCN", "tloc", "dataArg"])
    assert sub.rows.shape == (ds.n, 3)
    assert np.array_equal(sub.rows[:, 0], ds.column("CCN"))
    assert np.array_equal(sub.labels, ds.labels)
    with pytest.raises(UnknownFeature):
        select_features(ds, ["bogus"])


def test_dataset_csv_round_trip(metrics):
    labels = _labels_for([m for m, _ in metrics], seed=3)
    text = dataset_csv_text(metrics, labels)
    assert text.splitlines()[0] == ",".join(DATASET_COLUMNS)
    ds = load_dataset(io.StringIO(text))
    assert ds.equals(build_dataset(metrics, labels))


@settings(max_examples=40, deadline=None)
@given(st.permutations(range(27)), st.integers(0, 2**31))
def test_encoding_properties(order, seed):
    mined = _MINED
    metrics = [(m.method_id, v) for m, v in mined]
    ids = [metrics[i][0] for i in order[: max(2, len(order) // 2)]]
    labels = _labels_for(ids, seed)
    ds = build_dataset(metrics, labels)
    again = build_dataset(metrics, labels)
    assert ds.equals(again)
    assert ds.n == len(labels)
    assert ds.labels.tolist() == [[lm.labels[mr] for mr in MR_ORDER] for lm in labels]
    by_id = dict(metrics)
    for name, table in ds.encoders.items():
        assert sorted(table.values()) == list(range(len(table)))
        for i, mid in enumerate(ds.method_ids):
            assert ds.decode(name, int(ds.column(name)[i])) == str(by_id[mid].as_row()[name])


_MINED = mine_paths([GOLDEN / "java"])
