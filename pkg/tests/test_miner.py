import json
import os
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mrpred.errors import LexError, NoMinableFiles, UnbalancedDelimiters, UnsupportedLanguage
from mrpred.miner import (
    CSV_COLUMNS,
    SourceFile,
    TokenKind,
    compute_ccn,
    compute_metrics,
    metrics_csv_text,
    mine_file,
    mine_paths,
    segment_methods,
    tokenize,
)
from mrpred.miner.segment import split_top_level_text
from oracles import ccn_from_source

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = FIXTURES / "golden"


def _metrics(text, path="T.java"):
    f = SourceFile.from_text(path, text)
    return [(m, compute_metrics(m, f)) for m in segment_methods(f)]


def _only(text, path="T.java"):
    pairs = _metrics(text, path)
    assert len(pairs) == 1
    return pairs[0][1]


# --- lexer -----------------------------------------------------------------

def test_lexer_kinds():
    toks = tokenize('x += 1.5e3 + \'c\' + "s\\"q"; // tail', "java")
    kinds = [t.kind for t in toks]
    assert kinds == [
        TokenKind.IDENTIFIER, TokenKind.OPERATOR, TokenKind.NUMERIC, TokenKind.OPERATOR,
        TokenKind.CHAR, TokenKind.OPERATOR, TokenKind.STRING, TokenKind.PUNCTUATION,
    ]


def test_lexer_lines_and_comments():
    toks = tokenize("a\n/* x\n y */ b\n\nc", "java")
    assert [(t.text, t.line) for t in toks] == [("a", 1), ("b", 3), ("c", 5)]


def test_python_triple_quoted_string_spans_lines():
    toks = tokenize('x = """a\nb"""\ny', "python")
    assert toks[2].kind is TokenKind.STRING
    assert (toks[2].line, toks[2].last_line) == (1, 2)
    assert toks[3].line == 3


@pytest.mark.parametrize("text,line", [
    ("int a;\n/* open", 2),
    ('int a;\nString s = "abc;\n', 2),
    ("x = '''never\nclosed", 1),
])
def test_unterminated_raises_lexerror(text, line):
    lang = "python" if "'''" in text else "java"
    with pytest.raises(LexError) as info:
        tokenize(text, lang)
    assert info.value.line == line


def test_unknown_extension():
    with pytest.raises(UnsupportedLanguage):
        SourceFile.from_text("notes.txt", "hello")


def test_line_count():
    assert SourceFile.from_text("a.py", "x\ny").line_count == 2
    assert SourceFile.from_text("a.py", "x\ny\n").line_count == 2
    assert SourceFile.from_text("a.py", "").line_count == 1


# --- segmentation ----------------------------------------------------------

def test_single_method_on_line_three():
    f = SourceFile.from_text("F.java", "class F {\n\n    int f(int x){return x;}\n}\n")
    (m,) = segment_methods(f)
    assert (m.start_line, m.end_line, m.name) == (3, 3, "f")
    assert m.method_id == "F.java::f#3"


def test_empty_file_has_no_methods():
    assert segment_methods(SourceFile.from_text("E.java", "")) == []


def test_anonymous_class_stays_inside_enclosing_method():
    f = SourceFile.from_path(FIXTURES / "anon" / "Listener.java")
    methods = segment_methods(f)
    assert [m.name for m in methods] == ["register", "count"]
    assert methods[0].end_line == 9


def test_unbalanced_braces():
    with pytest.raises(UnbalancedDelimiters):
        segment_methods(SourceFile.from_text("U.java", "class U {\n void f() {\n"))


def test_python_nested_defs_stay_in_outer_record():
    text = "def outer(a):\n    def inner(b):\n        return b\n    return inner(a)\n\n\ndef g():\n    pass\n"
    methods = segment_methods(SourceFile.from_text("m.py", text))
    assert [(m.name, m.start_line, m.end_line) for m in methods] == [("outer", 1, 4), ("g", 7, 8)]


def test_method_tokens_lie_in_span():
    for path in sorted(GOLDEN.rglob("*.*")):
        if path.suffix == ".json":
            continue
        for m in segment_methods(SourceFile.from_path(path)):
            assert m.tokens
            assert all(m.start_line <= t.line <= m.end_line for t in m.tokens)


# --- metrics ---------------------------------------------------------------

def _golden_rows():
    return json.loads((GOLDEN / "expected_metrics.json").read_text())


def _mined_golden():
    pairs = mine_paths([GOLDEN / "java", GOLDEN / "python", GOLDEN / "cpp"])
    return {(m.method_id.split("::")[0], m.start_line): v.as_row() for m, v in pairs}


def test_golden_corpus_counts():
    rows = _golden_rows()
    exts = [r["ext"] for r in rows]
    assert exts.count("java") >= 25 and exts.count("python") >= 5 and exts.count("cpp") >= 5
    assert len(_mined_golden()) == len(rows)


@pytest.mark.parametrize("row", _golden_rows(), ids=lambda r: f"{r['file']}::{r['name']}")
def test_golden_metrics(row):
    got = _mined_golden_cached()[(row["file"], row["start_line"])]
    expected = {k: v for k, v in row.items() if k not in ("file", "name")}
    assert got == expected


_CACHE = {}


def _mined_golden_cached():
    if "golden" not in _CACHE:
        _CACHE["golden"] = _mined_golden()
    return _CACHE["golden"]


def test_void_empty_method():
    mv = _only("class A { void p(){} }")
    assert (mv.tloc, mv.numArg, mv.ccn, mv.has_return, mv.totalReturn, mv.numLoops) == (1, 0, 1, 0, 0, 0)
    assert (mv.returnDataType, mv.ext) == ("void", "java")


def test_if_and_for_ccn():
    mv = _only("class A { void g(boolean a, boolean b) { if (a && b) { for (;;) {} } } }")
    assert mv.ccn == 4


def test_sum_example():
    mv = _only(
        "class A {\n int sum(int[] xs) {\n"
        "  int s=0; for(int i=0;i<xs.length;i++){s+=xs[i];} return s;\n }\n}\n"
    )
    assert (mv.numLoops, mv.total_Var, mv.totalReturn, mv.has_return) == (1, 2, 1, 1)
    assert mv.dataArg == "int[]"


@pytest.mark.parametrize("body,expected", [
    ("x = 1;", 1),
    ("if (a) x(); else if (b && c) y();", 4),
    ("switch (n) { case 1: break; case 2: break; case 3: break; default: break; }", 4),
    ("try { f(); } catch (E e) { g(); }", 2),
    ("do { i++; } while (i < 3);", 3),
    ("int v = a ? b : c || d;", 3),
])
def test_ccn_examples(body, expected):
    mv = _only("class A { void m() { " + body + " } }")
    assert mv.ccn == expected


def test_python_ccn_counts_conditional_expression():
    mv = _only("def f(a, b):\n    return a if a and b else b\n", "f.py")
    assert mv.ccn == 3


def test_ccn_matches_independent_oracle_on_fixtures():
    for path in sorted(GOLDEN.rglob("*.*")):
        if path.suffix == ".json":
            continue
        f = SourceFile.from_path(path)
        for m in segment_methods(f):
            span = "\n".join(f.lines[m.start_line - 1:m.end_line])
            assert compute_ccn(m) == ccn_from_source(span, f.language), m.method_id


def test_metric_invariants_on_fixtures():
    for _, mv in mine_paths([GOLDEN], recursive=True):
        assert mv.ccn >= 1
        assert mv.nloc_whbl <= mv.nloc <= mv.tloc
        assert mv.sloc_whbl <= mv.tloc and mv.sloc_statements <= mv.tloc
        assert mv.end_line - mv.start_line + 1 == mv.tloc
        if mv.has_return:
            assert mv.returnDataType != "void"
        n_params = len(split_top_level_text(mv.full_parameters)) if mv.full_parameters else 0
        assert mv.numArg == n_params


def test_constructor_has_empty_return_type():
    pairs = _metrics("class K { K(int a) { this.a = a; } }")
    assert pairs[0][1].returnDataType == "" and pairs[0][1].has_return == 0


def test_python_has_return_requires_value():
    assert _only("def f():\n    return\n", "f.py").has_return == 0
    assert _only("def f() -> int:\n    return 1\n", "f.py").returnDataType == "int"


# --- mining ------------------------------------------------------------------

def test_three_files_seven_methods():
    pairs = mine_paths([FIXTURES / "three_files"])
    assert len(pairs) == 7
    keys = [(m.method_id.split("::")[0], m.start_line) for m, _ in pairs]
    assert keys == sorted(keys)


def test_unreadable_file_is_a_warning(tmp_path):
    good = tmp_path / "Good.java"
    good.write_text("class G { int f() { return 1; } }\n")
    bad = tmp_path / "Bad.java"
    bad.write_text("class B { void g() {} }\n")
    bad.chmod(0)
    if os.access(bad, os.R_OK):
        bad.chmod(0o644)
        bad.write_text("class B { void g() { /* never closed }\n")
    warnings = []
    pairs = mine_paths([bad, good], warnings=warnings)
    assert [m.name for m, _ in pairs] == ["f"]
    assert len(warnings) == 1 and "Bad.java" in warnings[0]


def test_empty_directory(tmp_path):
    with pytest.raises(NoMinableFiles, match="no minable files"):
        mine_paths([tmp_path])


def test_csv_header_and_quoting():
    text = metrics_csv_text(mine_file(SourceFile.from_text("Q.java", 'class Q { String s(String a) { return "x"; } }')))
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1].startswith('"Q.java::s#1","s","java",1,1,')


def test_idempotent_mining():
    a = mine_paths([GOLDEN], recursive=True)
    b = mine_paths([GOLDEN], recursive=True)
    assert metrics_csv_text(a) == metrics_csv_text(b)


# --- properties ------------------------------------------------------------

STATEMENTS = [
    "int {v} = {w} + 1;",
    "{w} += 2;",
    "if ({w} > 3) {{ {w}--; }}",
    "for (int {v}2 = 0; {v}2 < {w}; {v}2++) {{ total({v}2); }}",
    "while ({w} < 10) {w} *= 2;",
    "String {v}s = \"lit\" + {w};",
    "{w} = {w} > 0 ? {w} : -{w};",
    "return;",
]
NAMES = st.sampled_from(["alpha", "beta", "gamma", "delta", "omega", "kappa"])


def _method(stmts, v, w):
    body = [s.format(v=v, w=w) for s in stmts]
    return body, "class P {\n    void run(int " + w + ") {\n"


def _render(header, body):
    return header + "".join("        " + s + "\n" for s in body) + "    }\n}\n"


TOKEN_FIELDS = ("token_count", "ccn", "numOper", "numOperands", "total_Var", "numLoops",
                "numMethCall", "totalReturn")


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(STATEMENTS), min_size=1, max_size=6), st.integers(0, 6))
def test_comment_line_insensitivity(stmts, pos):
    body, header = _method(stmts, "loc", "arg")
    base = _only(_render(header, body))
    pos = min(pos, len(body))
    mv = _only(_render(header, body[:pos] + ["// just a note"] + body[pos:]))
    assert mv.tloc == base.tloc + 1 and mv.sloc_whbl == base.sloc_whbl + 1
    assert mv.nloc_whbl == base.nloc_whbl
    for name in TOKEN_FIELDS:
        assert getattr(mv, name) == getattr(base, name)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(STATEMENTS), min_size=1, max_size=6), st.integers(0, 6))
def test_blank_line_insensitivity(stmts, pos):
    body, header = _method(stmts, "loc", "arg")
    base = _only(_render(header, body))
    pos = min(pos, len(body))
    mv = _only(_render(header, body[:pos] + [""] + body[pos:]))
    assert mv.tloc == base.tloc + 1
    assert mv.sloc_whbl == base.sloc_whbl and mv.nloc_whbl == base.nloc_whbl
    for name in TOKEN_FIELDS:
        assert getattr(mv, name) == getattr(base, name)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(STATEMENTS), min_size=1, max_size=6), NAMES, NAMES)
def test_rename_invariance(stmts, v_new, w_new):
    if v_new == w_new:
        return
    body, header = _method(stmts, "loc", "arg")
    base = _only(_render(header, body))
    body2, header2 = _method(stmts, v_new, w_new)
    mv = _only(_render(header2, body2))
    assert mv.as_row() | {"full_parameters": ""} == base.as_row() | {"full_parameters": ""}


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(STATEMENTS), min_size=1, max_size=8))
def test_ccn_oracle_property(stmts):
    body, header = _method(stmts, "loc", "arg")
    text = _render(header, body)
    f = SourceFile.from_text("P.java", text)
    (m,) = segment_methods(f)
    assert compute_ccn(m) == ccn_from_source(text, "java")
