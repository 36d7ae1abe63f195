"""Split a token stream into method records.

Java and C++ bodies are found by brace matching from a declaration
header; Python bodies by the indentation of logical lines. Lambdas,
anonymous classes and nested functions stay inside the enclosing record.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import UnbalancedDelimiters
from .lexer import SourceFile, Token, TokenKind, tokenize

WORDISH = (TokenKind.IDENTIFIER, TokenKind.KEYWORD, TokenKind.NUMERIC, TokenKind.STRING, TokenKind.CHAR)

_SPACE_AFTER = {
    "java": frozenset(["]", ">", ">>", ">>>", "...", ")"]),
    "cpp": frozenset(["]", ">", ">>", "...", "*", "&", "&&", ")"]),
    "python": frozenset([":", ","]),
}

JAVA_MODIFIERS = frozenset(
    "public protected private static final abstract synchronized native strictfp default "
    "transient volatile sealed".split()
)
CPP_SPECIFIERS = frozenset(
    "static inline virtual explicit constexpr consteval extern friend".split()
)
_SCOPE_WORDS = frozenset(["class", "interface", "enum", "struct", "union", "namespace"])
_ACCESS = frozenset(["public", "private", "protected"])


@dataclass(frozen=True)
class Parameter:
    name: str
    type: str
    text: str


@dataclass(frozen=True)
class MethodRecord:
    method_id: str
    name: str
    signature: str
    start_line: int
    end_line: int
    tokens: tuple[Token, ...]
    language: str
    body_start: int
    body_end: int
    parameters: tuple[Parameter, ...] = ()
    return_type: str = ""

    @property
    def body(self) -> tuple[Token, ...]:
        return self.tokens[self.body_start : self.body_end]

    @property
    def short_name(self) -> str:
        return self.name.rsplit("::", 1)[-1].rsplit(".", 1)[-1]


def join_tokens(tokens, language: str) -> str:
    """Render tokens as text, with a single space only where one is needed."""
    space_after = _SPACE_AFTER[language]
    out: list[str] = []
    prev = None
    for t in tokens:
        if prev is not None and t.kind in WORDISH:
            if prev.kind in WORDISH or prev.text in space_after:
                out.append(" ")
        elif prev is not None and language == "python" and prev.text == ",":
            out.append(" ")
        out.append(t.text)
        prev = t
    return "".join(out)


def split_top_level(tokens, angle: bool = False) -> list[list[Token]]:
    """Split on commas that are not nested in brackets (and angle brackets if ``angle``)."""
    parts: list[list[Token]] = [[]]
    depth = 0
    adepth = 0
    for t in tokens:
        x = t.text
        if x in ("(", "[", "{"):
            depth += 1
        elif x in (")", "]", "}"):
            depth -= 1
        elif angle and depth == 0 and t.kind is not TokenKind.STRING:
            if x == "<":
                adepth += 1
            elif x in (">", ">>", ">>>"):
                adepth = max(0, adepth - len(x))
        if x == "," and depth == 0 and adepth == 0:
            parts.append([])
        else:
            parts[-1].append(t)
    return [p for p in parts if p]


def split_top_level_text(text: str) -> list[str]:
    """Text variant of :func:`split_top_level`, used to check parameter lists."""
    parts = [""]
    depth = 0
    for ch in text:
        if ch in "([{<":
            depth += 1
        elif ch in ")]}>":
            depth = max(0, depth - 1)
        if ch == "," and depth == 0:
            parts.append("")
        else:
            parts[-1] += ch
    return [p for p in parts if p.strip()]


def segment_methods(file: SourceFile, tokens: list[Token] | None = None) -> list[MethodRecord]:
    """Return every method/function declared in ``file`` in source order."""
    if tokens is None:
        tokens = tokenize(file.content, file.language)
    if not tokens:
        return []
    if file.language == "python":
        return _PythonSegmenter(file, tokens).run()
    return _BraceSegmenter(file, tokens).run()


def _match_brackets(tokens: list[Token], open_: str, close: str) -> dict[int, int]:
    match: dict[int, int] = {}
    stack: list[int] = []
    for i, t in enumerate(tokens):
        if t.kind is not TokenKind.PUNCTUATION:
            continue
        if t.text == open_:
            stack.append(i)
        elif t.text == close:
            if not stack:
                raise UnbalancedDelimiters(f"unmatched {close!r}", t.line)
            match[stack.pop()] = i
    if stack:
        raise UnbalancedDelimiters(f"{open_!r} is never closed", tokens[stack[-1]].line)
    return match


def _skip_group(tokens, i: int, open_: str, close: str, end: int) -> int:
    """``tokens[i]`` is ``open_``; return the index just past its matching ``close``."""
    depth = 0
    while i < end:
        x = tokens[i].text
        if x == open_:
            depth += 1
        elif x == close:
            depth -= 1
            if depth == 0:
                return i + 1
        i += 1
    return end


def _skip_angles(tokens, i: int, end: int) -> int:
    depth = 0
    while i < end:
        x = tokens[i].text
        if x == "<":
            depth += 1
        elif x in (">", ">>", ">>>"):
            depth -= len(x)
            if depth <= 0:
                return i + 1
        elif x in (";", "{", "}"):
            return i
        i += 1
    return end


class _BraceSegmenter:
    def __init__(self, file: SourceFile, tokens: list[Token]):
        self.file = file
        self.lang = file.language
        self.tokens = tokens
        self.match = _match_brackets(tokens, "{", "}")
        self.parens = _match_brackets(tokens, "(", ")")
        self.records: list[MethodRecord] = []

    def run(self) -> list[MethodRecord]:
        self._walk(0, len(self.tokens), None)
        return self.records

    def _walk(self, lo: int, hi: int, owner: str | None) -> None:
        toks = self.tokens
        header = lo
        i = lo
        while i < hi:
            t = toks[i]
            x = t.text
            if (
                self.lang == "cpp"
                and x == "#"
                and (i == 0 or toks[i - 1].last_line < t.line)
            ):
                line = t.line
                while i < hi and toks[i].line == line:
                    i += 1
                header = i
                continue
            if x == ";":
                header = i + 1
            elif x == ":" and self.lang == "cpp" and i > lo and toks[i - 1].text in _ACCESS:
                header = i + 1
            elif x == "{" and t.kind is TokenKind.PUNCTUATION:
                close = self.match[i]
                kind, info = self._classify(header, i, owner)
                if kind == "method":
                    self._record(info, i, close)
                    header = close + 1
                elif kind == "scope":
                    self._walk(i + 1, close, info)
                    header = close + 1
                elif not info:
                    header = close + 1
                i = close + 1
                continue
            i += 1

    def _classify(self, lo: int, hi: int, owner: str | None):
        toks = self.tokens
        k = lo
        # annotations (Java) and attributes (C++) ahead of the declaration
        while k < hi:
            if toks[k].text == "@" and k + 1 < hi and toks[k + 1].text != "interface":
                k += 2
                while k + 1 < hi and toks[k].text == "." and toks[k + 1].kind is TokenKind.IDENTIFIER:
                    k += 2
                if k < hi and toks[k].text == "(":
                    k = self.parens[k] + 1
            elif toks[k].text == "[" and k + 1 < hi and toks[k + 1].text == "[":
                k = _skip_group(toks, k, "[", "]", hi)
            else:
                break
        start = k
        depth = 0
        adepth = 0
        j = k
        while j < hi:
            t = toks[j]
            x = t.text
            if t.kind is TokenKind.KEYWORD and x == "operator" and depth == 0 and adepth == 0:
                # operator overload: the symbol up to the parameter list is part of the name
                p = j + 1
                if p + 1 < hi and toks[p].text == "(" and toks[p + 1].text == ")":
                    p += 2
                while p < hi and toks[p].text != "(":
                    p += 1
                if p >= hi:
                    return "other", False
                return "method", self._method_info(start, j, p, hi, owner)
            if x == "(":
                if depth == 0 and adepth == 0:
                    prev = toks[j - 1] if j > start else None
                    if prev is not None and prev.kind is TokenKind.IDENTIFIER:
                        info = self._method_info(start, j - 1, j, hi, owner)
                        return ("method", info) if info else ("other", False)
                    return "other", False
                depth += 1
            elif x == ")":
                depth -= 1
            elif depth == 0:
                if x == "=":
                    return "other", True
                if x == "<":
                    adepth += 1
                elif x in (">", ">>", ">>>"):
                    adepth = max(0, adepth - len(x))
                elif adepth == 0 and self._is_scope_word(j, hi):
                    name = self._scope_name(j, hi)
                    return "scope", name
            j += 1
        return "other", False

    def _is_scope_word(self, j: int, hi: int) -> bool:
        t = self.tokens[j]
        if t.kind is TokenKind.KEYWORD and t.text in _SCOPE_WORDS:
            return True
        if self.lang == "java" and t.text == "record" and j + 1 < hi:
            return self.tokens[j + 1].kind is TokenKind.IDENTIFIER
        if self.lang == "cpp" and t.text == "extern" and j + 1 < hi:
            return self.tokens[j + 1].kind is TokenKind.STRING
        return False

    def _scope_name(self, j: int, hi: int) -> str | None:
        for t in self.tokens[j + 1 : hi]:
            if t.kind is TokenKind.IDENTIFIER:
                return t.text
        return None

    def _method_info(self, start: int, name_start: int, paren: int, hi: int, owner: str | None):
        toks = self.tokens
        while (
            self.lang == "cpp"
            and name_start - 2 >= start
            and toks[name_start - 1].text == "::"
            and toks[name_start - 2].kind is TokenKind.IDENTIFIER
        ):
            name_start -= 2
        if self.lang == "cpp" and name_start - 1 >= start and toks[name_start - 1].text == "~":
            name_start -= 1
        name = "".join(t.text for t in toks[name_start:paren])
        close = self.parens[paren]
        ret_tokens = self._return_type_tokens(start, name_start)
        if self.lang == "java" and not ret_tokens and name != owner:
            return None  # enum constant bodies and the like
        if self.lang == "cpp" and ret_tokens and ret_tokens[-1].text == "auto":
            arrow = next((q for q in range(close + 1, hi) if toks[q].text == "->"), None)
            if arrow is not None:
                ret_tokens = list(toks[arrow + 1 : hi])
        return {
            "start": start,
            "name": name,
            "paren": paren,
            "close": close,
            "return": ret_tokens,
        }

    def _return_type_tokens(self, start: int, name_start: int) -> list[Token]:
        toks = self.tokens
        out: list[Token] = []
        i = start
        mods = JAVA_MODIFIERS if self.lang == "java" else CPP_SPECIFIERS
        leading = True
        while i < name_start:
            t = toks[i]
            x = t.text
            if x == "template" and self.lang == "cpp":
                i += 1
                if i < name_start and toks[i].text == "<":
                    i = _skip_angles(toks, i, name_start)
                continue
            if x == "@" and self.lang == "java":
                i += 2
                while i + 1 < name_start and toks[i].text == ".":
                    i += 2
                if i < name_start and toks[i].text == "(":
                    i = self.parens[i] + 1
                continue
            if x in mods and t.kind is TokenKind.KEYWORD or (x == "sealed" and self.lang == "java"):
                i += 1
                continue
            if x == "<" and leading and self.lang == "java":
                i = _skip_angles(toks, i, name_start)
                leading = False
                continue
            leading = False
            out.append(t)
            i += 1
        return out

    def _params(self, paren: int, close: int) -> tuple[Parameter, ...]:
        inner = self.tokens[paren + 1 : close]
        entries = split_top_level(inner, angle=True)
        params = []
        for entry in entries:
            p = _brace_param(entry, self.lang)
            if p is not None:
                params.append(p)
        return tuple(params)

    def _record(self, info, brace: int, close: int) -> None:
        toks = self.tokens
        start = info["start"]
        span = tuple(toks[start : close + 1])
        ret = info["return"]
        return_type = join_tokens(ret, self.lang) if ret else ""
        first = toks[start].line
        last = toks[close].last_line
        name = info["name"]
        self.records.append(
            MethodRecord(
                method_id=f"{self.file.path}::{name}#{first}",
                name=name,
                signature=join_tokens(toks[start:brace], self.lang),
                start_line=first,
                end_line=last,
                tokens=span,
                language=self.lang,
                body_start=brace - start + 1,
                body_end=close - start,
                parameters=self._params(info["paren"], info["close"]),
                return_type=return_type,
            )
        )


def _strip_annotations(entry: list[Token]) -> list[Token]:
    out: list[Token] = []
    i = 0
    while i < len(entry):
        if entry[i].text == "@" and i + 1 < len(entry):
            i += 2
            while i + 1 < len(entry) and entry[i].text == ".":
                i += 2
            if i < len(entry) and entry[i].text == "(":
                i = _skip_group(entry, i, "(", ")", len(entry))
            continue
        out.append(entry[i])
        i += 1
    return out


def _brace_param(entry: list[Token], lang: str) -> Parameter | None:
    text = join_tokens(entry, lang)
    decl = _strip_annotations(entry)
    # C++ default argument
    for q, t in enumerate(decl):
        if t.text == "=":
            decl = decl[:q]
            break
    decl = [t for t in decl if not (t.text == "final" and lang == "java")]
    if not decl:
        return None
    if lang == "cpp" and len(decl) == 1 and decl[0].text == "void":
        return None
    dims = 0
    while len(decl) >= 3 and decl[-1].text == "]" and decl[-2].text == "[":
        decl = decl[:-2]
        dims += 1
    last = decl[-1]
    if len(decl) >= 2 and last.kind is TokenKind.IDENTIFIER:
        name = last.text
        type_text = join_tokens(decl[:-1], lang) + "[]" * dims
    else:
        name = ""
        type_text = join_tokens(decl, lang) + "[]" * dims
    return Parameter(name, type_text, text)


class _PythonSegmenter:
    def __init__(self, file: SourceFile, tokens: list[Token]):
        self.file = file
        self.tokens = tokens
        self.lines = file.lines
        self.parens = _match_brackets(tokens, "(", ")")

    def _continued(self, tok: Token) -> bool:
        text = tok.text
        if "\n" in text:
            end_col = len(text) - text.rindex("\n") - 1
        else:
            end_col = tok.col + len(text)
        tail = self.lines[tok.last_line - 1][end_col:]
        return tail.strip() == "\\"

    def logical_starts(self) -> list[int]:
        starts = []
        depth = 0
        prev = None
        for i, t in enumerate(self.tokens):
            if depth == 0 and (prev is None or (t.line > prev.last_line and not self._continued(prev))):
                starts.append(i)
            if t.text in ("(", "[", "{"):
                depth += 1
            elif t.text in (")", "]", "}"):
                depth = max(0, depth - 1)
            prev = t
        return starts

    def run(self) -> list[MethodRecord]:
        toks = self.tokens
        starts = self.logical_starts()
        records = []
        stack: list[tuple[str, int]] = []
        open_def: tuple[int, int] | None = None  # (token index, column)
        for pos, s in enumerate(starts):
            t = toks[s]
            col = t.col
            while stack and col <= stack[-1][1]:
                stack.pop()
            if open_def is not None and col <= open_def[1]:
                records.append(self._record(open_def[0], s))
                open_def = None
            head = s
            if t.text == "async" and s + 1 < len(toks):
                head = s + 1
            word = toks[head].text
            inside_def = any(kind == "def" for kind, _ in stack)
            if word == "def" and toks[head].kind is TokenKind.KEYWORD:
                if not inside_def:
                    open_def = (s, col)
                stack.append(("def", col))
            elif word == "class" and toks[head].kind is TokenKind.KEYWORD:
                stack.append(("class", col))
        if open_def is not None:
            records.append(self._record(open_def[0], len(toks)))
        return records

    def _record(self, s: int, stop: int) -> MethodRecord:
        toks = self.tokens
        head = s + 1 if toks[s].text == "async" else s
        name_tok = toks[head + 1]
        paren = head + 2
        close = self.parens.get(paren, paren)
        # the header ends at the first ':' at bracket depth 0 after the parameters
        colon = close + 1
        arrow_ret: list[Token] = []
        while colon < stop and toks[colon].text != ":":
            colon += 1
        if close + 1 < stop and toks[close + 1].text == "->":
            arrow_ret = list(toks[close + 2 : colon])
        span = tuple(toks[s:stop])
        params = []
        for entry in split_top_level(toks[paren + 1 : close]):
            p = _python_param(entry)
            if p is not None:
                params.append(p)
        first = toks[s].line
        last = span[-1].last_line
        return MethodRecord(
            method_id=f"{self.file.path}::{name_tok.text}#{first}",
            name=name_tok.text,
            signature=join_tokens(toks[s:colon], "python"),
            start_line=first,
            end_line=last,
            tokens=span,
            language="python",
            body_start=colon - s + 1,
            body_end=len(span),
            parameters=tuple(params),
            return_type=join_tokens(arrow_ret, "python") if arrow_ret else "unknown",
        )


def _python_param(entry: list[Token]) -> Parameter | None:
    if len(entry) == 1 and entry[0].text in ("*", "/"):
        return None
    text = join_tokens(entry, "python")
    i = 0
    while i < len(entry) and entry[i].text in ("*", "**"):
        i += 1
    name = entry[i].text if i < len(entry) else ""
    ann: list[Token] = []
    depth = 0
    in_ann = False
    for t in entry[i + 1 :]:
        if t.text in ("(", "[", "{"):
            depth += 1
        elif t.text in (")", "]", "}"):
            depth -= 1
        if depth == 0 and t.text == ":" and not in_ann:
            in_ann = True
            continue
        if depth == 0 and t.text == "=":
            break
        if in_ann:
            ann.append(t)
    return Parameter(name, join_tokens(ann, "python") if ann else "unknown", text)
