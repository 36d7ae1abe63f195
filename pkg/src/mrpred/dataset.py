"""Join mined metrics with MR labels and encode them as a numeric matrix."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from typing import IO, Iterable, Sequence

import numpy as np

from .errors import JoinError, LabelValueError, ParseError, SchemaError, UnknownFeature
from .miner.metrics import CSV_COLUMNS, FEATURE_NAMES, TEXT_FEATURES, MetricVector


class MRKind(str, Enum):
    ADD = "ADD"
    EXC = "EXC"
    INC = "INC"
    MUL = "MUL"
    PER = "PER"
    INV = "INV"

    @classmethod
    def parse(cls, text: str) -> "MRKind":
        try:
            return cls(text.upper())
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown MR {text!r}; expected one of {valid}") from None


MR_ORDER: tuple[MRKind, ...] = tuple(MRKind)
LABEL_COLUMNS = ["method_id"] + [m.value for m in MR_ORDER]
DATASET_COLUMNS = CSV_COLUMNS + [m.value for m in MR_ORDER]
_INT_COLUMNS = frozenset(CSV_COLUMNS) - {"method_id", "name"} - set(TEXT_FEATURES)


@dataclass(frozen=True)
class LabeledMethod:
    method_id: str
    labels: dict[MRKind, int]

    def __post_init__(self):
        if set(self.labels) != set(MR_ORDER):
            raise ValueError(f"{self.method_id}: labels must cover all six MRs")


@dataclass(frozen=True, eq=False)
class Dataset:
    """Encoded feature matrix plus one 0/1 label column per MR.

    ``encoders`` maps each categorical feature to its category -> code table,
    assigned in first-occurrence order over the rows.
    """

    feature_names: tuple[str, ...]
    rows: np.ndarray
    labels: np.ndarray
    method_ids: tuple[str, ...]
    encoders: dict[str, dict[str, int]] = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.method_ids)
        if self.rows.shape != (n, len(self.feature_names)) or self.labels.shape != (n, len(MR_ORDER)):
            raise ValueError("rows, labels and method_ids disagree on shape")

    @property
    def n(self) -> int:
        return len(self.method_ids)

    def y(self, mr: MRKind) -> np.ndarray:
        return self.labels[:, MR_ORDER.index(MRKind(mr))].copy()

    def column(self, name: str) -> np.ndarray:
        return self.rows[:, self._index(name)]

    def _index(self, name: str) -> int:
        try:
            return self.feature_names.index(name)
        except ValueError:
            raise UnknownFeature(f"unknown feature {name!r}") from None

    def decode(self, name: str, code: int) -> str | None:
        """Inverse of the encoder table; None for unseen (-1) or unknown codes."""
        for value, c in self.encoders[name].items():
            if c == code:
                return value
        return None

    def encode(self, metrics: MetricVector) -> np.ndarray:
        """Encode a new method with the stored tables; unseen categories map to -1."""
        row = metrics.as_row()
        out = np.empty(len(self.feature_names))
        for j, name in enumerate(self.feature_names):
            if name in self.encoders:
                out[j] = self.encoders[name].get(str(row[name]), -1)
            else:
                out[j] = float(row[name])
        return out

    def equals(self, other: "Dataset") -> bool:
        return (
            self.feature_names == other.feature_names
            and self.method_ids == other.method_ids
            and np.array_equal(self.rows, other.rows)
            and np.array_equal(self.labels, other.labels)
            and self.encoders == other.encoders
        )


def _check_header(header: list[str] | None, expected: list[str]) -> None:
    if header is None:
        raise SchemaError("empty file: header row missing", expected[0])
    if header == expected:
        return
    for name in expected:
        if name not in header:
            raise SchemaError(f"missing column {name!r}", name)
    for name in header:
        if name not in expected:
            raise SchemaError(f"unexpected column {name!r}", name)
    for got, want in zip(header, expected):
        if got != want:
            raise SchemaError(f"column {got!r} out of order (expected {want!r})", got)
    raise SchemaError("duplicate columns in header", None)


def _read_rows(stream: IO[str], expected: list[str]) -> Iterable[tuple[int, dict[str, str]]]:
    reader = csv.reader(stream)
    _check_header(next(reader, None), expected)
    for row_no, cells in enumerate(reader, start=1):
        if not cells:
            continue
        if len(cells) != len(expected):
            col = expected[min(len(cells), len(expected) - 1)]
            raise ParseError(f"expected {len(expected)} cells, found {len(cells)}", row_no, col)
        yield row_no, dict(zip(expected, cells))


def _metric_from_cells(row_no: int, cells: dict[str, str]) -> MetricVector:
    values: dict[str, object] = {}
    for name in FEATURE_NAMES:
        text = cells[name]
        if name in _INT_COLUMNS:
            try:
                values[name] = int(text)
            except ValueError:
                raise ParseError(f"not an integer: {text!r}", row_no, name) from None
        else:
            values[name] = text
    return MetricVector.from_row(values)


def _label_from_cells(row_no: int, cells: dict[str, str]) -> LabeledMethod:
    labels = {}
    for mr in MR_ORDER:
        text = cells[mr.value].strip()
        if text not in ("0", "1"):
            raise LabelValueError(
                f"row {row_no}, column {mr.value!r}: label must be 0 or 1, got {text!r}"
            )
        labels[mr] = int(text)
    return LabeledMethod(cells["method_id"], labels)


def load_metrics(stream: IO[str]) -> list[tuple[str, MetricVector]]:
    return [(c["method_id"], _metric_from_cells(r, c)) for r, c in _read_rows(stream, CSV_COLUMNS)]


def load_labels(stream: IO[str]) -> list[LabeledMethod]:
    return [_label_from_cells(r, c) for r, c in _read_rows(stream, LABEL_COLUMNS)]


def build_dataset(
    metrics: Sequence[tuple[str, MetricVector]],
    labels: Sequence[LabeledMethod],
    warnings: list[str] | None = None,
) -> Dataset:
    by_id = {}
    for mid, mv in metrics:
        by_id.setdefault(mid, mv)
    missing = [lm.method_id for lm in labels if lm.method_id not in by_id]
    if missing:
        raise JoinError(missing)
    labeled = {lm.method_id for lm in labels}
    extra = [mid for mid in by_id if mid not in labeled]
    if extra and warnings is not None:
        warnings.append(f"dropped {len(extra)} mined method(s) without labels")

    encoders: dict[str, dict[str, int]] = {name: {} for name in TEXT_FEATURES}
    rows = np.empty((len(labels), len(FEATURE_NAMES)))
    for i, lm in enumerate(labels):
        row = by_id[lm.method_id].as_row()
        for j, name in enumerate(FEATURE_NAMES):
            if name in encoders:
                table = encoders[name]
                rows[i, j] = table.setdefault(str(row[name]), len(table))
            else:
                rows[i, j] = float(row[name])
    y = np.array([[lm.labels[mr] for mr in MR_ORDER] for lm in labels], dtype=np.int64)
    return Dataset(
        feature_names=tuple(FEATURE_NAMES),
        rows=rows,
        labels=y.reshape(len(labels), len(MR_ORDER)),
        method_ids=tuple(lm.method_id for lm in labels),
        encoders={k: encoders[k] for k in FEATURE_NAMES if k in encoders},
    )


def select_features(ds: Dataset, names: Sequence[str]) -> Dataset:
    idx = [ds._index(name) for name in names]
    return Dataset(
        feature_names=tuple(names),
        rows=ds.rows[:, idx].copy(),
        labels=ds.labels.copy(),
        method_ids=ds.method_ids,
        encoders={k: dict(v) for k, v in ds.encoders.items() if k in names},
    )


# --- combined dataset CSV (metrics schema + six label columns) ---------------

def _name_of(method_id: str) -> str:
    tail = method_id.split("::", 1)[-1]
    return tail.rsplit("#", 1)[0]


def write_dataset_csv(
    stream: IO[str],
    metrics: Sequence[tuple[str, MetricVector]],
    labels: Sequence[LabeledMethod],
) -> None:
    """Write the joined table in label order; raises JoinError like build_dataset."""
    by_id = dict(metrics)
    missing = [lm.method_id for lm in labels if lm.method_id not in by_id]
    if missing:
        raise JoinError(missing)
    stream.write(",".join(DATASET_COLUMNS) + "\n")
    writer = csv.writer(stream, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    for lm in labels:
        row = by_id[lm.method_id].as_row()
        cells = [lm.method_id, _name_of(lm.method_id)] + [row[c] for c in FEATURE_NAMES]
        writer.writerow(cells + [lm.labels[mr] for mr in MR_ORDER])


def read_dataset_csv(stream: IO[str]) -> tuple[list[tuple[str, MetricVector]], list[LabeledMethod]]:
    metrics, labels = [], []
    for row_no, cells in _read_rows(stream, DATASET_COLUMNS):
        metrics.append((cells["method_id"], _metric_from_cells(row_no, cells)))
        labels.append(_label_from_cells(row_no, cells))
    return metrics, labels


def load_dataset(stream: IO[str]) -> Dataset:
    return build_dataset(*read_dataset_csv(stream))


def load_dataset_path(path) -> Dataset:
    with open(path, newline="", encoding="utf-8") as fh:
        return load_dataset(fh)


def dataset_csv_text(metrics, labels) -> str:
    buf = io.StringIO()
    write_dataset_csv(buf, metrics, labels)
    return buf.getvalue()
