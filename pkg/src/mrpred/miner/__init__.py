from .lexer import SourceFile, Token, TokenKind, language_for_path, tokenize
from .metrics import (
    CSV_COLUMNS,
    FEATURE_NAMES,
    TEXT_FEATURES,
    MetricVector,
    compute_ccn,
    compute_metrics,
)
from .mine import metrics_csv_text, mine_file, mine_paths, write_metrics_csv
from .segment import MethodRecord, Parameter, segment_methods

__all__ = [
    "CSV_COLUMNS",
    "FEATURE_NAMES",
    "TEXT_FEATURES",
    "MethodRecord",
    "MetricVector",
    "Parameter",
    "SourceFile",
    "Token",
    "TokenKind",
    "compute_ccn",
    "compute_metrics",
    "language_for_path",
    "metrics_csv_text",
    "mine_file",
    "mine_paths",
    "segment_methods",
    "tokenize",
    "write_metrics_csv",
]
