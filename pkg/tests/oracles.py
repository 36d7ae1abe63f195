"""Independent reference implementations used by the tests.

Nothing here imports the package's lexer or metric code, so agreement with
the library is meaningful.
"""

from __future__ import annotations

import itertools
import re

_C_STRIP = re.compile(
    r'//[^\n]*|/\*.*?\*/|"(?:\\.|[^"\\\n])*"|\'(?:\\.|[^\'\\\n])*\'', re.DOTALL
)
_PY_STRIP = re.compile(
    r'#[^\n]*|"""[\s\S]*?"""|\'\'\'[\s\S]*?\'\'\'|"(?:\\.|[^"\\\n])*"|\'(?:\\.|[^\'\\\n])*\''
)
_C_WORDS = re.compile(r"\b(if|for|while|do|case|catch)\b")
_C_SYMBOLS = re.compile(r"&&|\|\||\?")
_PY_WORDS = re.compile(r"\b(if|elif|for|while|except|and|or)\b")


def _blank_out(match: re.Match) -> str:
    return re.sub(r"[^\n]", " ", match.group(0))


def ccn_from_source(text: str, language: str) -> int:
    """1 + decision points found by regex over comment/string-free source."""
    if language == "python":
        clean = _PY_STRIP.sub(_blank_out, text)
        return 1 + len(_PY_WORDS.findall(clean))
    clean = _C_STRIP.sub(_blank_out, text)
    return 1 + len(_C_WORDS.findall(clean)) + len(_C_SYMBOLS.findall(clean))


def auc_pairs(scores, truth) -> float:
    pos = [s for s, t in zip(scores, truth) if t == 1]
    neg = [s for s, t in zip(scores, truth) if t == 0]
    total = 0.0
    for p, n in itertools.product(pos, neg):
        total += 1.0 if p > n else 0.5 if p == n else 0.0
    return total / (len(pos) * len(neg))
