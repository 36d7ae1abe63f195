"""Importance ranking, top-n subset sweeps, the classifier grid and the
baseline comparison, plus their JSON / Markdown / CSV renderings."""

from __future__ import annotations

import csv
import hashlib
import io
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Sequence

import numpy as np

from . import reference
from .dataset import MR_ORDER, Dataset, MRKind
from .errors import DegenerateData, FoldError, MissingCell
from .eval import METRIC_NAMES, EvalReport, FoldResult, cross_validate
from .learn import ClassifierKind, HyperParams, train

SWEEP_SIZES = (3, 6, 9, 12, 15, 18, 21)
GRID_SIZES = (3, 12, 21)
KIND_ORDER = (ClassifierKind.RF, ClassifierKind.DT, ClassifierKind.GNB,
              ClassifierKind.SVM_LINEAR, ClassifierKind.LR)


# --- importance ------------------------------------------------------------------------

def rank_features(
    ds: Dataset,
    mr: MRKind,
    runs: int = 10,
    seed: int = 42,
    params: HyperParams | None = None,
) -> list[tuple[str, float]]:
    """Average RF importance over ``runs`` full-data fits, scaled so the top is 1.0.

    Run r uses seed ``seed + r``. Ties keep the dataset's column order.
    """
    if runs < 1:
        raise ValueError("runs must be >= 1")
    params = params or HyperParams()
    total = np.zeros(len(ds.feature_names))
    for r in range(runs):
        model = train(ClassifierKind.RF, ds, mr, params.with_seed(seed + r))
        total += model.importances
    mean = total / runs
    if mean.max() <= 0:
        raise DegenerateData("all importances are zero")
    score = mean / mean.max()
    order = sorted(range(len(score)), key=lambda j: (-score[j], j))
    return [(ds.feature_names[j], float(score[j])) for j in order]


@dataclass(frozen=True)
class ImportanceTable:
    per_mr: dict[MRKind, list[tuple[str, float]]]
    runs: int
    seed: int
    avg_row: list[tuple[str, float]]

    def ranking(self, mr: MRKind) -> list[str]:
        return [name for name, _ in self.per_mr[MRKind(mr)]]

    def to_json(self) -> dict:
        return {
            "runs": self.runs,
            "seed": self.seed,
            "per_mr": {mr.value: [[n, s] for n, s in rows] for mr, rows in self.per_mr.items()},
            "avg_row": [[n, s] for n, s in self.avg_row],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "ImportanceTable":
        return cls(
            per_mr={MRKind(k): [(n, float(s)) for n, s in v] for k, v in doc["per_mr"].items()},
            runs=int(doc["runs"]),
            seed=int(doc["seed"]),
            avg_row=[(n, float(s)) for n, s in doc["avg_row"]],
        )


def importance_table(
    ds: Dataset,
    runs: int = 10,
    seed: int = 42,
    params: HyperParams | None = None,
    mrs: Sequence[MRKind] = MR_ORDER,
) -> ImportanceTable:
    per_mr = {MRKind(mr): rank_features(ds, mr, runs, seed, params) for mr in mrs}
    names = list(ds.feature_names)
    means = []
    for j, name in enumerate(names):
        vals = [dict(rows)[name] for rows in per_mr.values()]
        means.append((name, float(np.mean(vals)), j))
    means.sort(key=lambda t: (-t[1], t[2]))
    return ImportanceTable(per_mr, runs, seed, [(n, s) for n, s, _ in means])


# --- subset sweep ----------------------------------------------------------------------

@dataclass(frozen=True)
class SweepResult:
    mr: MRKind
    subset_sizes: tuple[int, ...]
    auc_by_size: dict[int, float]
    precision_by_size: dict[int, float]
    seed: int
    ranking: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "mr": self.mr.value,
            "seed": self.seed,
            "subset_sizes": list(self.subset_sizes),
            "auc_by_size": {str(n): v for n, v in self.auc_by_size.items()},
            "precision_by_size": {str(n): v for n, v in self.precision_by_size.items()},
            "ranking": list(self.ranking),
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "SweepResult":
        return cls(
            mr=MRKind(doc["mr"]),
            subset_sizes=tuple(doc["subset_sizes"]),
            auc_by_size={int(k): float(v) for k, v in doc["auc_by_size"].items()},
            precision_by_size={int(k): float(v) for k, v in doc["precision_by_size"].items()},
            seed=int(doc["seed"]),
            ranking=tuple(doc.get("ranking", ())),
            warnings=tuple(doc.get("warnings", ())),
        )


def _names(ranking) -> list[str]:
    return [r if isinstance(r, str) else r[0] for r in ranking]


def sweep_subsets(
    ds: Dataset,
    mr: MRKind,
    ranking,
    seed: int = 42,
    params: HyperParams | None = None,
    k: int = 10,
    sizes: Sequence[int] = SWEEP_SIZES,
) -> SweepResult:
    """RF cross-validation on the top-n ranked features for each n in ``sizes``."""
    names = _names(ranking)
    if sorted(names) != sorted(ds.feature_names):
        raise ValueError("ranking must cover every feature of the dataset exactly once")
    mr = MRKind(mr)
    auc, prec, warnings = {}, {}, []
    used = tuple(n for n in sizes if n <= len(names))
    for n in used:
        rep = cross_validate(ds, mr, ClassifierKind.RF, params, names[:n], k, seed)
        auc[n] = rep.mean["auc_roc"]
        prec[n] = rep.mean["precision"]
        warnings.extend(f"n={n}: {w}" for w in rep.warnings)
    return SweepResult(mr, used, auc, prec, seed, tuple(names), tuple(warnings))


# --- grid ------------------------------------------------------------------------------

def cell_seed(seed: int, mr: MRKind, kind: ClassifierKind, size: int) -> int:
    """Stable per-cell seed: first 4 bytes of sha256("seed:MR:KIND:size"), big endian."""
    key = f"{int(seed)}:{MRKind(mr).value}:{ClassifierKind(kind).value}:{int(size)}"
    return int.from_bytes(hashlib.sha256(key.encode()).digest()[:4], "big")


@dataclass
class GridResult:
    reports: list[EvalReport]
    seed: int
    sizes: tuple[int, ...]
    k: int
    rankings: dict[MRKind, list[str]] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    def cell(self, mr: MRKind, kind: ClassifierKind, size: int) -> EvalReport | None:
        for r in self.reports:
            if r.mr is MRKind(mr) and r.classifier is ClassifierKind(kind) and len(r.feature_subset) == size:
                return r
        return None

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "k": self.k,
            "sizes": list(self.sizes),
            "rankings": {mr.value: list(v) for mr, v in self.rankings.items()},
            "cells": [dict(r.to_json(), cell_seed=r.seed) for r in self.reports],
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "GridResult":
        return cls(
            reports=[report_from_json(c) for c in doc["cells"]],
            seed=int(doc["seed"]),
            sizes=tuple(doc["sizes"]),
            k=int(doc["k"]),
            rankings={MRKind(k): list(v) for k, v in doc.get("rankings", {}).items()},
            warnings=list(doc.get("warnings", [])),
        )


def report_from_json(doc: dict) -> EvalReport:
    return EvalReport(
        mr=MRKind(doc["mr"]),
        classifier=ClassifierKind.parse(doc["classifier"]),
        feature_subset=tuple(doc["feature_subset"]),
        k=int(doc["k"]),
        seed=int(doc["seed"]),
        per_fold=tuple(FoldResult(**f) for f in doc["per_fold"]),
        mean={m: float(doc["mean"][m]) for m in METRIC_NAMES},
        warnings=tuple(doc.get("warnings", ())),
        mode=doc.get("mode", "kfold"),
    )


def grid_evaluate(
    ds: Dataset,
    rankings: dict[MRKind, Sequence],
    sizes: Sequence[int] = GRID_SIZES,
    kinds: Sequence[ClassifierKind] = KIND_ORDER,
    k: int = 10,
    seed: int = 42,
    params: HyperParams | None = None,
    mrs: Sequence[MRKind] | None = None,
) -> GridResult:
    """Cross-validate every (MR, classifier, top-n) cell; failing cells become warnings."""
    mrs = [MRKind(m) for m in (mrs or rankings.keys())]
    out = GridResult([], int(seed), tuple(sizes), k,
                     {mr: _names(rankings[mr]) for mr in mrs})
    for mr in mrs:
        names = _names(rankings[mr])
        for kind in kinds:
            kind = ClassifierKind(kind)
            for size in sizes:
                if size > len(names):
                    out.warnings.append(f"{mr.value}/{kind.cli_name}/n={size}: only {len(names)} features")
                    continue
                s = cell_seed(seed, mr, kind, size)
                try:
                    out.reports.append(cross_validate(ds, mr, kind, params, names[:size], k, s))
                except (DegenerateData, FoldError) as exc:
                    out.warnings.append(f"{mr.value}/{kind.cli_name}/n={size}: {exc}")
    return out


# --- baseline comparison -----------------------------------------------------------------

@dataclass(frozen=True)
class BaselineTable:
    per_mr: dict[MRKind, dict[str, float]]

    @classmethod
    def embedded(cls) -> "BaselineTable":
        return cls({
            MRKind(mr): dict(zip(("nf_pf_svm", "gk_svm", "rwk_svm"), vals))
            for mr, vals in reference.BASELINE_AUC.items()
        })


BASELINE_LABELS = {"nf_pf_svm": "NF-PF", "gk_svm": "GK", "rwk_svm": "RWK"}


def round2(x: float) -> float:
    return float(Decimal(repr(float(x))).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class ComparisonRow:
    mr: MRKind
    ours: dict[ClassifierKind, float]
    baselines: dict[str, float]
    best_ours: tuple[ClassifierKind, float]
    best_baseline: tuple[str, float]
    winner: str  # "ours", "baseline" or "tie"

    def to_json(self) -> dict:
        return {
            "mr": self.mr.value,
            "ours": {k.cli_name: v for k, v in self.ours.items()},
            "baselines": {BASELINE_LABELS[k]: v for k, v in self.baselines.items()},
            "best_ours": [self.best_ours[0].cli_name, self.best_ours[1]],
            "best_baseline": [BASELINE_LABELS[self.best_baseline[0]], self.best_baseline[1]],
            "winner": self.winner,
        }


def compare_baseline(
    grid: Iterable[EvalReport],
    size: int = 12,
    baseline: BaselineTable | None = None,
) -> list[ComparisonRow]:
    """Best of our classifiers at ``size`` features against each embedded baseline.

    Values are compared after rounding to two decimals, the precision at
    which the baseline numbers are known, so equal rounded values are a tie.
    """
    baseline = baseline or BaselineTable.embedded()
    cells: dict[MRKind, dict[ClassifierKind, float]] = {}
    for r in grid:
        if len(r.feature_subset) == size:
            cells.setdefault(r.mr, {})[r.classifier] = round2(r.mean["auc_roc"])
    missing = [mr.value for mr in MR_ORDER if not cells.get(mr)]
    if missing:
        raise MissingCell(f"no n={size} results for: {', '.join(missing)}")
    rows = []
    for mr in MR_ORDER:
        ours = {k: cells[mr][k] for k in KIND_ORDER if k in cells[mr]}
        best_k = max(ours, key=lambda k: (ours[k], -KIND_ORDER.index(k)))
        base = dict(baseline.per_mr[mr])
        best_b = max(base, key=lambda b: (base[b], list(base).index(b)))
        o, b = ours[best_k], base[best_b]
        winner = "ours" if o > b else "baseline" if b > o else "tie"
        rows.append(ComparisonRow(mr, ours, base, (best_k, o), (best_b, b), winner))
    return rows


def reference_grid() -> list[EvalReport]:
    """Mean-only reports built from the embedded reference grid (no per-fold data)."""
    out = []
    for mr, by_kind in reference.GRID.items():
        for kind, metrics in by_kind.items():
            for i, size in enumerate(reference.GRID_SIZES):
                mean = {m: metrics[m][i] for m in METRIC_NAMES}
                subset = tuple(reference.IMPORTANCE_COLUMNS[:size])
                out.append(EvalReport(MRKind(mr), ClassifierKind(kind), subset, 10, 0, (), mean))
    return out


# --- rendering ---------------------------------------------------------------------------

def _fmt(x: float, digits: int = 3) -> str:
    return f"{x:.{digits}f}"


def render_markdown(
    grid: GridResult,
    importance: ImportanceTable | None = None,
    sweeps: Sequence[SweepResult] | None = None,
    provenance: dict | None = None,
) -> str:
    lines: list[str] = ["# Metamorphic relation prediction report", ""]
    if provenance:
        lines.append("| key | value |")
        lines.append("|---|---|")
        for key, value in provenance.items():
            lines.append(f"| {key} | `{value}` |")
        lines.append("")
    if importance is not None:
        names = [n for n, _ in importance.avg_row]
        lines += [f"## Feature importance ({importance.runs} RF runs, seed {importance.seed})", ""]
        lines.append("| MR | " + " | ".join(names) + " |")
        lines.append("|---" * (len(names) + 1) + "|")
        for mr, rows in importance.per_mr.items():
            d = dict(rows)
            lines.append(f"| {mr.value} | " + " | ".join(_fmt(d[n], 2) for n in names) + " |")
        lines.append("| **AVG** | " + " | ".join(_fmt(s, 2) for _, s in importance.avg_row) + " |")
        lines.append("")
    if sweeps:
        sizes = list(sweeps[0].subset_sizes)
        lines += [f"## RF with the top-n ranked features (seed {sweeps[0].seed})", ""]
        lines.append("| Metric | MR | " + " | ".join(f"n={n}" for n in sizes) + " |")
        lines.append("|---" * (len(sizes) + 2) + "|")
        for label, attr in (("AUC", "auc_by_size"), ("Precision", "precision_by_size")):
            for s in sweeps:
                vals = getattr(s, attr)
                lines.append(f"| {label} | {s.mr.value} | " + " | ".join(_fmt(vals[n]) for n in sizes) + " |")
        lines.append("")
    lines += [f"## Classifier grid ({grid.k}-fold CV, seed {grid.seed})", ""]
    header = "| MR | Classifier | " + " | ".join(
        f"{m} n={n}" for m in METRIC_NAMES for n in grid.sizes) + " |"
    lines.append(header)
    lines.append("|---" * (2 + len(METRIC_NAMES) * len(grid.sizes)) + "|")
    for mr in MR_ORDER:
        for kind in KIND_ORDER:
            cells = [grid.cell(mr, kind, n) for n in grid.sizes]
            if all(c is None for c in cells):
                continue
            vals = []
            for m in METRIC_NAMES:
                vals += ["n/a" if c is None else _fmt(c.mean[m]) for c in cells]
            lines.append(f"| {mr.value} | {kind.cli_name} | " + " | ".join(vals) + " |")
    lines.append("")
    if 12 in grid.sizes:
        try:
            rows = compare_baseline(grid.reports, 12)
        except MissingCell as exc:
            lines += ["## Baseline comparison", "", f"Not available: {exc}", ""]
        else:
            lines += ["## AUC-ROC against control-flow-graph baselines (n=12)", "",
                      "Baseline values are fixed reference constants measured on the original "
                      "100-method corpus; they are not recomputed here. Values are rounded to "
                      "two decimals before the winner is decided.", ""]
            kinds = [k.cli_name for k in KIND_ORDER]
            lines.append("| MR | NF-PF | GK | RWK | " + " | ".join(kinds) + " | winner |")
            lines.append("|---" * (5 + len(kinds)) + "|")
            for r in rows:
                ours = {k.cli_name: v for k, v in r.ours.items()}
                lines.append(
                    f"| {r.mr.value} | " + " | ".join(_fmt(v, 2) for v in r.baselines.values())
                    + " | " + " | ".join(_fmt(ours[k], 2) if k in ours else "n/a" for k in kinds)
                    + f" | {r.winner} |"
                )
            lines.append("")
    if grid.warnings:
        lines += ["## Warnings", ""] + [f"- {w}" for w in grid.warnings] + [""]
    return "\n".join(lines)


def baseline_series_csv(rows: Sequence[ComparisonRow]) -> str:
    """One row per MR: the three baseline AUCs followed by ours per classifier."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    kinds = [k for k in KIND_ORDER]
    w.writerow(["mr", "NF-PF", "GK", "RWK"] + [f"SM-{k.cli_name}" for k in kinds])
    for r in rows:
        w.writerow([r.mr.value] + [f"{v:.2f}" for v in r.baselines.values()]
                   + [f"{r.ours[k]:.2f}" if k in r.ours else "" for k in kinds])
    return buf.getvalue()


# --- replication against the reference numbers ------------------------------------------

@dataclass(frozen=True)
class ReplicationCheck:
    label_counts: dict[str, int]
    label_counts_match: bool
    add_rf_top12: dict[str, float]
    add_rf_deltas: dict[str, float]
    within_tolerance: bool
    outcomes: dict[str, bool]

    @property
    def passed(self) -> bool:
        return self.label_counts_match and self.within_tolerance and all(self.outcomes.values())


def qualitative_outcomes(rows: Sequence[ComparisonRow]) -> dict[str, bool]:
    """The three headline outcomes of the baseline comparison."""
    by = {r.mr: r for r in rows}
    rwk = [mr for mr, r in by.items()
           if r.baselines["rwk_svm"] >= r.best_ours[1] and r.best_baseline[0] == "rwk_svm"]
    inv = by[MRKind.INV]
    mul = by[MRKind.MUL]
    return {
        "rwk_best_for_five": sorted(m.value for m in rwk) == sorted(
            m.value for m in MR_ORDER if m is not MRKind.INV),
        "svm_wins_inv": inv.winner == "ours" and inv.best_ours[0] is ClassifierKind.SVM_LINEAR,
        "lr_ties_mul": mul.ours.get(ClassifierKind.LR) == mul.baselines["rwk_svm"],
    }


def replication_check(ds: Dataset, seed: int = 42, tolerance: float = 0.10,
                      runs: int = 10, k: int = 10) -> ReplicationCheck:
    """RF top-12 on ADD against the reference row, then the n=12 grid outcomes."""
    counts = {mr.value: int(ds.y(mr).sum()) for mr in MR_ORDER}
    expected = {mr: int(v) for mr, v in reference.LABEL_COUNTS.items()}
    rankings = {mr: rank_features(ds, mr, runs, seed) for mr in MR_ORDER}
    add = cross_validate(ds, MRKind.ADD, ClassifierKind.RF, None,
                         _names(rankings[MRKind.ADD])[:12], k, seed)
    target = {m: reference.GRID["ADD"]["RF"][m][reference.GRID_SIZES.index(12)] for m in METRIC_NAMES}
    deltas = {m: add.mean[m] - target[m] for m in METRIC_NAMES}
    grid = grid_evaluate(ds, rankings, sizes=(12,), k=k, seed=seed)
    try:
        outcomes = qualitative_outcomes(compare_baseline(grid.reports))
    except MissingCell:
        outcomes = {"complete_grid": False}
    return ReplicationCheck(counts, counts == expected and ds.n == reference.N_METHODS,
                            dict(add.mean), deltas,
                            all(abs(d) <= tolerance for d in deltas.values()), outcomes)
