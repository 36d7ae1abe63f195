"""Command line entry point: mine, label, rank, sweep, grid, evaluate, report."""

from __future__ import annotations

import argparse
import io
import json
import logging
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .analysis import (
    GRID_SIZES,
    GridResult,
    ImportanceTable,
    baseline_series_csv,
    compare_baseline,
    grid_evaluate,
    importance_table,
    rank_features,
    render_markdown,
    sweep_subsets,
)
from .dataset import MR_ORDER, MRKind, build_dataset, load_dataset_path, load_labels, load_metrics
from .dataset import write_dataset_csv
from .errors import MissingCell, MrpredError, ValidationError
from .eval import cross_validate, repeated_holdout
from .learn import ClassifierKind
from .miner.mine import mine_paths, write_metrics_csv

log = logging.getLogger("mrpred")

DEFAULT_SEED = 42
DEFAULT_FOLDS = 10
DEFAULT_RUNS = 10

SYNOPSIS = {
    "mine": "mrpred mine <path>... [--recursive] --out FILE",
    "label": "mrpred label --metrics FILE --labels FILE --out FILE",
    "rank": "mrpred rank --dataset FILE [--runs N] [--seed N] --out FILE",
    "sweep": "mrpred sweep --dataset FILE [--seed N] --out FILE",
    "grid": "mrpred grid --dataset FILE [--sizes LIST] [--folds N] [--seed N] --out FILE",
    "evaluate": ("mrpred evaluate --dataset FILE --mr MR --classifier {rf,dt,gnb,svm,lr} "
                 "--features {all,top:N,list:a,b,c} [--folds N] "
                 "[--repeated-holdout R:S --repeats N] [--seed N] --out FILE"),
    "report": "mrpred report --grid FILE [--importance FILE] --out FILE",
}


class UsageError(Exception):
    def __init__(self, message: str, command: str | None = None):
        super().__init__(message)
        self.command = command


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        command = self.prog.split()[-1] if " " in self.prog else None
        raise UsageError(message, command if command in SYNOPSIS else None)


@dataclass(frozen=True)
class RunConfig:
    command: str
    seed: int
    k: int
    out: Path
    argv: tuple[str, ...]

    def provenance(self) -> dict:
        return {
            "tool": "mrpred",
            "version": __version__,
            "command": " ".join(("mrpred",) + self.argv),
            "seed": self.seed,
        }


# --- argument helpers ------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be a non-negative integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"seed must be a non-negative integer, got {text!r}")
    return value


def _sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated sizes, got {text!r}")
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError(f"sizes must be positive, got {text!r}")
    return sizes


def _mr(text: str) -> MRKind:
    try:
        return MRKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _ratio(text: str) -> tuple[int, int]:
    parts = text.split(":")
    try:
        r, s = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected R:S such as 70:30, got {text!r}")
    if r < 1 or s < 1:
        raise argparse.ArgumentTypeError(f"both parts of R:S must be positive, got {text!r}")
    return r, s


def _features(text: str) -> tuple[str, object]:
    if text == "all":
        return "all", None
    if text.startswith("top:"):
        return "top", _positive(text[4:])
    if text.startswith("list:"):
        names = [n for n in text[5:].split(",") if n]
        if names:
            return "list", names
    raise argparse.ArgumentTypeError(f"expected all, top:N or list:a,b,c, got {text!r}")


def default_seed() -> int:
    raw = os.environ.get("MRPRED_SEED")
    if raw is None or raw == "":
        return DEFAULT_SEED
    try:
        return _seed(raw)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"MRPRED_SEED: {exc}")


def build_parser(seed_default: int = DEFAULT_SEED) -> argparse.ArgumentParser:
    parser = _Parser(prog="mrpred", description="Predict metamorphic relations from code metrics.")
    parser.add_argument("--version", action="version", version=f"mrpred {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def command(name, help_):
        p = sub.add_parser(name, help=help_, usage=SYNOPSIS[name])
        p.add_argument("--out", required=True, type=Path)
        return p

    p = command("mine", "compute method metrics for source files")
    p.add_argument("paths", nargs="+")
    p.add_argument("--recursive", action="store_true")

    p = command("label", "join a metrics CSV with MR labels")
    p.add_argument("--metrics", required=True, type=Path)
    p.add_argument("--labels", required=True, type=Path)

    p = command("rank", "RF importance ranking per MR")
    p.add_argument("--dataset", required=True, type=Path)
    p.add_argument("--runs", type=_positive, default=DEFAULT_RUNS)
    p.add_argument("--seed", type=_seed, default=seed_default)

    p = command("sweep", "RF on the top-n ranked features for every MR")
    p.add_argument("--dataset", required=True, type=Path)
    p.add_argument("--seed", type=_seed, default=seed_default)

    p = command("grid", "every classifier at several subset sizes")
    p.add_argument("--dataset", required=True, type=Path)
    p.add_argument("--sizes", type=_sizes, default=GRID_SIZES)
    p.add_argument("--folds", type=_positive, default=DEFAULT_FOLDS)
    p.add_argument("--seed", type=_seed, default=seed_default)

    p = command("evaluate", "cross-validate one classifier on one MR")
    p.add_argument("--dataset", required=True, type=Path)
    p.add_argument("--mr", required=True, type=_mr)
    p.add_argument("--classifier", required=True, choices=["rf", "dt", "gnb", "svm", "lr"])
    p.add_argument("--features", required=True, type=_features)
    p.add_argument("--folds", type=_positive, default=DEFAULT_FOLDS)
    p.add_argument("--repeated-holdout", dest="holdout", type=_ratio)
    p.add_argument("--repeats", type=_positive)
    p.add_argument("--seed", type=_seed, default=seed_default)

    p = command("report", "Markdown tables and the baseline CSV series")
    p.add_argument("--grid", required=True, type=Path)
    p.add_argument("--importance", type=Path)
    return parser


# --- output ----------------------------------------------------------------------------

def _check_writable(path: Path) -> None:
    parent = path.parent if str(path.parent) else Path(".")
    if not parent.is_dir():
        raise ValidationError(f"--out: directory does not exist: {parent}")
    if not os.access(parent, os.W_OK):
        raise ValidationError(f"--out: directory is not writable: {parent}")
    if path.is_dir():
        raise ValidationError(f"--out: is a directory: {path}")


def write_atomic(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _json_text(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _write_json(cfg: RunConfig, payload: dict, path: Path | None = None) -> None:
    write_atomic(path or cfg.out, _json_text({"provenance": cfg.provenance(), **payload}))


def _write_csv(cfg: RunConfig, text: str, path: Path | None = None, **meta) -> None:
    path = path or cfg.out
    write_atomic(path, text)
    write_atomic(Path(f"{path}.meta.json"), _json_text({"provenance": cfg.provenance(), **meta}))


def _read_json(path: Path, flag: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise ValidationError(f"{flag}: no such file: {path}")
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{flag}: not valid JSON: {exc}")


def _open_input(path: Path, flag: str):
    if not path.is_file():
        raise ValidationError(f"{flag}: no such file: {path}")
    return open(path, newline="", encoding="utf-8")


def _load_dataset(path: Path):
    if not path.is_file():
        raise ValidationError(f"--dataset: no such file: {path}")
    return load_dataset_path(path)


# --- commands --------------------------------------------------------------------------

def cmd_mine(args, cfg: RunConfig) -> None:
    warnings: list[str] = []
    try:
        pairs = mine_paths(args.paths, recursive=args.recursive, warnings=warnings)
    except FileNotFoundError as exc:
        raise ValidationError(f"<path>: {exc}")
    buf = io.StringIO()
    write_metrics_csv(buf, pairs)
    _write_csv(cfg, buf.getvalue(), methods=len(pairs), warnings=warnings)
    log.info("mined %d methods", len(pairs))


def cmd_label(args, cfg: RunConfig) -> None:
    with _open_input(args.metrics, "--metrics") as fh:
        metrics = load_metrics(fh)
    with _open_input(args.labels, "--labels") as fh:
        labels = load_labels(fh)
    warnings: list[str] = []
    build_dataset(metrics, labels, warnings)
    buf = io.StringIO()
    write_dataset_csv(buf, metrics, labels)
    counts = {mr.value: sum(lm.labels[mr] for lm in labels) for mr in MR_ORDER}
    _write_csv(cfg, buf.getvalue(), methods=len(labels), positives=counts, warnings=warnings)


def cmd_rank(args, cfg: RunConfig) -> None:
    ds = _load_dataset(args.dataset)
    table = importance_table(ds, runs=args.runs, seed=args.seed)
    _write_json(cfg, {"importance": table.to_json()})


def _rankings(ds, seed: int) -> dict[MRKind, list[str]]:
    return {mr: [n for n, _ in rank_features(ds, mr, DEFAULT_RUNS, seed)] for mr in MR_ORDER}


def cmd_sweep(args, cfg: RunConfig) -> None:
    ds = _load_dataset(args.dataset)
    sweeps = [sweep_subsets(ds, mr, r, args.seed, k=cfg.k)
              for mr, r in _rankings(ds, args.seed).items()]
    _write_json(cfg, {"k": cfg.k, "sweeps": [s.to_json() for s in sweeps]})


def cmd_grid(args, cfg: RunConfig) -> None:
    ds = _load_dataset(args.dataset)
    grid = grid_evaluate(ds, _rankings(ds, args.seed), sizes=args.sizes, k=args.folds, seed=args.seed)
    for w in grid.warnings:
        log.warning(w)
    _write_json(cfg, {"grid": grid.to_json()})


def cmd_evaluate(args, cfg: RunConfig) -> None:
    if args.repeats is not None and args.holdout is None:
        raise UsageError("--repeats requires --repeated-holdout", "evaluate")
    ds = _load_dataset(args.dataset)
    mode, value = args.features
    if mode == "all":
        subset = list(ds.feature_names)
    elif mode == "top":
        if value > len(ds.feature_names):
            raise ValidationError(f"--features: top:{value} exceeds {len(ds.feature_names)} features")
        subset = [n for n, _ in rank_features(ds, args.mr, DEFAULT_RUNS, args.seed)][:value]
    else:
        unknown = [n for n in value if n not in ds.feature_names]
        if unknown:
            raise ValidationError(f"--features: unknown feature(s): {', '.join(unknown)}")
        subset = value
    kind = ClassifierKind.parse(args.classifier)
    if args.holdout is not None:
        report = repeated_holdout(ds, args.mr, kind, subset=subset, ratio=args.holdout,
                                  repeats=args.repeats or 10, seed=args.seed)
    else:
        report = cross_validate(ds, args.mr, kind, subset=subset, k=args.folds, seed=args.seed)
    _write_json(cfg, report.to_json())


def cmd_report(args, cfg: RunConfig) -> None:
    doc = _read_json(args.grid, "--grid")
    if "grid" not in doc:
        raise ValidationError(f"--grid: {args.grid} is not a grid report")
    grid = GridResult.from_json(doc["grid"])
    importance = None
    sources = {"grid": doc.get("provenance", {}).get("command", "")}
    if args.importance is not None:
        idoc = _read_json(args.importance, "--importance")
        if "importance" not in idoc:
            raise ValidationError(f"--importance: {args.importance} is not an importance report")
        importance = ImportanceTable.from_json(idoc["importance"])
        sources["importance"] = idoc.get("provenance", {}).get("command", "")
    prov = cfg.provenance()
    prov["grid seed"] = grid.seed
    prov.update({f"{k} source": v for k, v in sources.items()})
    write_atomic(cfg.out, render_markdown(grid, importance, provenance=prov))
    csv_path = cfg.out.with_suffix(".baseline.csv")
    try:
        rows = compare_baseline(grid.reports)
    except MissingCell as exc:
        log.warning("baseline series not written: %s", exc)
        return
    _write_csv(cfg, baseline_series_csv(rows), csv_path, grid_seed=grid.seed,
               comparison=[r.to_json() for r in rows])


COMMANDS = {
    "mine": cmd_mine,
    "label": cmd_label,
    "rank": cmd_rank,
    "sweep": cmd_sweep,
    "grid": cmd_grid,
    "evaluate": cmd_evaluate,
    "report": cmd_report,
}


def _usage_message(exc: UsageError) -> str:
    lines = [f"mrpred: error: {exc}"]
    if exc.command:
        lines.append(f"usage: {SYNOPSIS[exc.command]}")
    else:
        lines += ["usage:"] + [f"  {s}" for s in SYNOPSIS.values()]
    return "\n".join(lines)


def run(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser(default_seed()).parse_args(argv)
        if args.command is None:
            raise UsageError("a command is required")
    except UsageError as exc:
        print(_usage_message(exc), file=sys.stderr)
        return 1
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(message)s")
    cfg = RunConfig(args.command, getattr(args, "seed", default_seed()),
                    getattr(args, "folds", DEFAULT_FOLDS), args.out, tuple(argv))
    try:
        _check_writable(args.out)
        COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(_usage_message(exc), file=sys.stderr)
        return 1
    except ValidationError as exc:
        print(f"mrpred {args.command}: error: {exc}", file=sys.stderr)
        print(f"usage: {SYNOPSIS[args.command]}", file=sys.stderr)
        return 1
    except (MrpredError, OSError) as exc:
        print(f"mrpred {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
