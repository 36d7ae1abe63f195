"""Walk paths, segment every recognised source file and compute its metrics."""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import replace
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import IO, Iterable

from ..errors import LexError, NoMinableFiles, UnbalancedDelimiters
from .lexer import EXTENSIONS, SourceFile, tokenize
from .metrics import CSV_COLUMNS, MetricVector, compute_metrics
from .segment import MethodRecord, segment_methods

log = logging.getLogger(__name__)

BEST_EFFORT_LANGUAGES = frozenset(["cpp", "python"])


def mine_file(file: SourceFile) -> list[tuple[MethodRecord, MetricVector]]:
    tokens = tokenize(file.content, file.language)
    return [(m, compute_metrics(m, file)) for m in segment_methods(file, tokens)]


def _collect(paths: Iterable[str | Path], recursive: bool) -> list[tuple[Path, str]]:
    """Return (filesystem path, display path) pairs, deduplicated and sorted."""
    found: dict[Path, str] = {}
    for raw in paths:
        p = Path(raw)
        if p.is_dir():
            walker = p.rglob("*") if recursive else p.glob("*")
            for f in walker:
                if f.is_file() and f.suffix.lower() in EXTENSIONS:
                    display = f.relative_to(p.parent if p.name else p).as_posix()
                    found.setdefault(f.resolve(), display)
        elif p.exists() or p.is_symlink():
            found.setdefault(p.resolve(), p.as_posix())
        else:
            raise FileNotFoundError(f"no such file or directory: {raw}")
    return sorted(((fs, shown) for fs, shown in found.items()), key=lambda x: x[1])


def mine_paths(
    paths: Iterable[str | Path],
    recursive: bool = False,
    warnings: list[str] | None = None,
    workers: int = 1,
) -> list[tuple[MethodRecord, MetricVector]]:
    """Mine every file under ``paths``; output is ordered by (path, start_line).

    Files that cannot be read or lexed are skipped with a warning; the run
    only fails when no file at all could be mined.
    """
    warnings = warnings if warnings is not None else []
    targets = _collect(paths, recursive)

    def work(item):
        fs_path, shown = item
        try:
            file = SourceFile.from_path(fs_path, display_path=shown)
            return file.language, mine_file(file), None
        except (OSError, LexError, UnbalancedDelimiters) as exc:
            return None, None, f"{shown}: {exc}"

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(work, targets))
    else:
        results = [work(t) for t in targets]

    out: list[tuple[MethodRecord, MetricVector]] = []
    minable = 0
    best_effort = set()
    for language, pairs, problem in results:
        if problem is not None:
            log.warning(problem)
            warnings.append(problem)
            continue
        minable += 1
        if language in BEST_EFFORT_LANGUAGES:
            best_effort.add(language)
        out.extend(pairs)
    if minable == 0:
        raise NoMinableFiles("no minable files")
    for language in sorted(best_effort):
        msg = f"{language} metrics are best effort (lexer fidelity)"
        log.info(msg)
        warnings.append(msg)
    out.sort(key=lambda pair: (_path_of(pair[0]), pair[0].start_line))
    return _dedupe_ids(out)


def _path_of(m: MethodRecord) -> str:
    return m.method_id.split("::", 1)[0]


def _dedupe_ids(pairs):
    seen: dict[str, int] = {}
    out = []
    for m, v in pairs:
        k = seen.get(m.method_id, 0)
        seen[m.method_id] = k + 1
        if k:
            m = _with_id(m, f"{m.method_id}~{k + 1}")
        out.append((m, v))
    return out


def _with_id(m: MethodRecord, method_id: str) -> MethodRecord:
    return replace(m, method_id=method_id)


def write_metrics_csv(stream: IO[str], pairs: Iterable[tuple[MethodRecord, MetricVector]]) -> None:
    stream.write(",".join(CSV_COLUMNS) + "\n")
    writer = csv.writer(stream, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    for m, v in pairs:
        row = v.as_row()
        writer.writerow([m.method_id, m.name] + [row[c] for c in CSV_COLUMNS[2:]])


def metrics_csv_text(pairs) -> str:
    buf = io.StringIO()
    write_metrics_csv(buf, pairs)
    return buf.getvalue()
