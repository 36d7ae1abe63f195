"""Regex-driven lexers for Java, C++ and Python.

Comments and whitespace are dropped; every emitted token remembers the
line it starts on and the line it ends on (only string literals can
span lines).
"""

from __future__ import annotations

import keyword
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from ..errors import LexError, UnsupportedLanguage


class TokenKind(str, Enum):
    KEYWORD = "keyword"
    IDENTIFIER = "identifier"
    NUMERIC = "numeric_literal"
    STRING = "string_literal"
    CHAR = "char_literal"
    OPERATOR = "operator"
    PUNCTUATION = "punctuation"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    col: int = 0
    end_line: int = 0

    @property
    def last_line(self) -> int:
        return max(self.line, self.end_line)


EXTENSIONS = {
    ".java": "java",
    ".cpp": "cpp",
    ".cc": "cpp",
    ".cxx": "cpp",
    ".hpp": "cpp",
    ".h": "cpp",
    ".py": "python",
}


def language_for_path(path: str | Path) -> str:
    ext = Path(path).suffix.lower()
    try:
        return EXTENSIONS[ext]
    except KeyError:
        raise UnsupportedLanguage(f"unrecognized extension {ext!r} for {path}") from None


def count_lines(content: str) -> int:
    if not content:
        return 1
    n = content.count("\n")
    return n if content.endswith("\n") else n + 1


@dataclass(frozen=True)
class SourceFile:
    path: str
    language: str
    content: str
    line_count: int

    @classmethod
    def from_text(cls, path: str, content: str) -> "SourceFile":
        language = language_for_path(path)
        content = content.replace("\r\n", "\n").replace("\r", "\n")
        return cls(path, language, content, count_lines(content))

    @classmethod
    def from_path(cls, path: str | Path, display_path: str | None = None) -> "SourceFile":
        language_for_path(path)
        text = Path(path).read_text(encoding="utf-8", errors="replace")
        return cls.from_text(display_path or Path(path).as_posix(), text)

    @property
    def lines(self) -> list[str]:
        return self.content.split("\n")


JAVA_KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue default do
    double else enum extends final finally float for goto if implements import instanceof int
    interface long native new package private protected public return short static strictfp
    super switch synchronized this throw throws transient try void volatile while true false
    null""".split()
)

CPP_KEYWORDS = frozenset(
    """alignas alignof and and_eq asm auto bitand bitor bool break case catch char char8_t
    char16_t char32_t class compl concept const consteval constexpr constinit const_cast
    continue co_await co_return co_yield decltype default delete do double dynamic_cast else
    enum explicit export extern false float for friend goto if inline int long mutable
    namespace new noexcept not not_eq nullptr operator or or_eq private protected public
    register reinterpret_cast requires return short signed sizeof static static_assert
    static_cast struct switch template this thread_local throw true try typedef typeid
    typename union unsigned using virtual void volatile wchar_t while xor xor_eq""".split()
)

PYTHON_KEYWORDS = frozenset(keyword.kwlist)

KEYWORDS = {"java": JAVA_KEYWORDS, "cpp": CPP_KEYWORDS, "python": PYTHON_KEYWORDS}

_JAVA_OPS = [
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&", "||", "==", "!=",
    "<=", ">=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>",
    "+", "-", "*", "/", "%", "=", "<", ">", "!", "~", "?", ":", "&", "|", "^",
    "{", "}", "(", ")", "[", "]", ";", ",", ".", "@",
]
_CPP_OPS = [
    "<=>", "->*", "<<=", ">>=", "...", "->", "::", ".*", "++", "--", "&&", "||", "==", "!=",
    "<=", ">=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>", "##",
    "+", "-", "*", "/", "%", "=", "<", ">", "!", "~", "?", ":", "&", "|", "^",
    "{", "}", "(", ")", "[", "]", ";", ",", ".", "#",
]
_PY_OPS = [
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "**", "//", "<<", ">>", "<=", ">=",
    "==", "!=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "@=",
    "+", "-", "*", "/", "%", "@", "&", "|", "^", "~", "<", ">", "=", ":", "!",
    "(", ")", "[", "]", "{", "}", ";", ",", ".",
]

PUNCTUATION = frozenset(["{", "}", "(", ")", "[", "]", ";", ",", ".", "@", "...", "::", "#"])


def _op_regex(ops: list[str]) -> re.Pattern[str]:
    ordered = sorted(set(ops), key=len, reverse=True)
    return re.compile("|".join(re.escape(o) for o in ordered))


_NUMBER_C = re.compile(
    r"""(?:0[xX][0-9a-fA-F_']+(?:\.[0-9a-fA-F_']*)?(?:[pP][+-]?\d+)?
        |0[bB][01_']+
        |(?:\d[\d_']*\.?[\d_']*|\.\d[\d_']*)(?:[eE][+-]?\d+)?)
        [a-zA-Z]*""",
    re.X,
)
_NUMBER_PY = re.compile(
    r"""(?:0[xX][0-9a-fA-F_]+|0[oO][0-7_]+|0[bB][01_]+
        |(?:\d[\d_]*\.?[\d_]*|\.\d[\d_]*)(?:[eE][+-]?\d+)?)[jJ]?""",
    re.X,
)
_IDENT_JAVA = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_WS = re.compile(r"[ \t\f\v]+")
_PY_STR_PREFIX = re.compile(r"(?:[rRbBuUfF]{1,2})?(?='|\")")
_CPP_STR_PREFIX = re.compile(r"(?:u8|u|U|L)?R?(?=\")|(?:u8|u|U|L)(?=')")


class _Scanner:
    def __init__(self, text: str, language: str):
        self.text = text
        self.language = language
        self.pos = 0
        self.line = 1
        self.line_start = 0
        self.tokens: list[Token] = []
        self.keywords = KEYWORDS[language]
        self.ops = _op_regex({"java": _JAVA_OPS, "cpp": _CPP_OPS, "python": _PY_OPS}[language])
        self.ident = _IDENT_JAVA if language == "java" else _IDENT
        self.number = _NUMBER_PY if language == "python" else _NUMBER_C

    def emit(self, kind: TokenKind, start: int, end: int, line: int, col: int) -> None:
        text = self.text[start:end]
        self.tokens.append(Token(kind, text, line, col, self.line))

    def newline_in(self, start: int, end: int) -> None:
        chunk = self.text[start:end]
        n = chunk.count("\n")
        if n:
            self.line += n
            self.line_start = start + chunk.rindex("\n") + 1

    def run(self) -> list[Token]:
        text = self.text
        size = len(text)
        line_comment = "#" if self.language == "python" else "//"
        while self.pos < size:
            ch = text[self.pos]
            if ch == "\n":
                self.line += 1
                self.pos += 1
                self.line_start = self.pos
                continue
            m = _WS.match(text, self.pos)
            if m:
                self.pos = m.end()
                continue
            if ch == "\\" and text.startswith("\n", self.pos + 1):
                # explicit line continuation
                self.pos += 2
                self.line += 1
                self.line_start = self.pos
                continue
            if text.startswith(line_comment, self.pos):
                end = text.find("\n", self.pos)
                self.pos = size if end < 0 else end
                continue
            if self.language != "python" and text.startswith("/*", self.pos):
                end = text.find("*/", self.pos + 2)
                if end < 0:
                    raise LexError("unterminated block comment", self.line)
                self.newline_in(self.pos, end + 2)
                self.pos = end + 2
                continue
            if self._string():
                continue
            col = self.pos - self.line_start
            m = self.ident.match(text, self.pos)
            if m:
                word = m.group()
                kind = TokenKind.KEYWORD if word in self.keywords else TokenKind.IDENTIFIER
                self.emit(kind, self.pos, m.end(), self.line, col)
                self.pos = m.end()
                continue
            if ch.isdigit() or (ch == "." and self.pos + 1 < size and text[self.pos + 1].isdigit()):
                m = self.number.match(text, self.pos)
                self.emit(TokenKind.NUMERIC, self.pos, m.end(), self.line, col)
                self.pos = m.end()
                continue
            m = self.ops.match(text, self.pos)
            if m:
                op = m.group()
                kind = TokenKind.PUNCTUATION if op in PUNCTUATION else TokenKind.OPERATOR
                if self.language == "python" and op == ":":
                    kind = TokenKind.PUNCTUATION
                self.emit(kind, self.pos, m.end(), self.line, col)
                self.pos = m.end()
                continue
            # stray character (e.g. a non-ASCII symbol): keep it as an operator token
            self.emit(TokenKind.OPERATOR, self.pos, self.pos + 1, self.line, col)
            self.pos += 1
        return self.tokens

    def _string(self) -> bool:
        text = self.text
        if self.language == "python":
            m = _PY_STR_PREFIX.match(text, self.pos)
        elif self.language == "cpp":
            m = _CPP_STR_PREFIX.match(text, self.pos)
        else:
            m = None
        start = self.pos
        qpos = m.end() if m else self.pos
        if qpos >= len(text) or text[qpos] not in "\"'":
            return False
        prefix = text[start:qpos]
        quote = text[qpos]
        line, col = self.line, start - self.line_start
        if self.language == "python":
            end = self._python_string(qpos, quote)
            kind = TokenKind.STRING
        elif self.language == "cpp" and prefix.endswith("R") and quote == '"':
            end = self._raw_cpp_string(qpos)
            kind = TokenKind.STRING
        elif quote == '"' and self.language == "java" and text.startswith('"""', qpos):
            close = text.find('"""', qpos + 3)
            while close >= 0 and text[close - 1] == "\\":
                close = text.find('"""', close + 1)
            if close < 0:
                raise LexError("unterminated text block", line)
            end = close + 3
            kind = TokenKind.STRING
        else:
            end = self._simple_string(qpos, quote)
            kind = TokenKind.STRING if quote == '"' else TokenKind.CHAR
        self.newline_in(start, end)
        self.tokens.append(Token(kind, text[start:end], line, col, self.line))
        self.pos = end
        return True

    def _simple_string(self, qpos: int, quote: str) -> int:
        text = self.text
        i = qpos + 1
        while i < len(text):
            c = text[i]
            if c == "\\":
                i += 2
                continue
            if c == quote:
                return i + 1
            if c == "\n":
                break
            i += 1
        what = "string" if quote == '"' else "character"
        raise LexError(f"unterminated {what} literal", self.line)

    def _raw_cpp_string(self, qpos: int) -> int:
        text = self.text
        paren = text.find("(", qpos)
        if paren < 0:
            raise LexError("malformed raw string literal", self.line)
        delim = text[qpos + 1 : paren]
        close = text.find(")" + delim + '"', paren)
        if close < 0:
            raise LexError("unterminated raw string literal", self.line)
        return close + len(delim) + 2

    def _python_string(self, qpos: int, quote: str) -> int:
        text = self.text
        if text.startswith(quote * 3, qpos):
            delim = quote * 3
            i = qpos + 3
            while i < len(text):
                if text[i] == "\\":
                    i += 2
                    continue
                if text.startswith(delim, i):
                    return i + 3
                i += 1
            raise LexError("unterminated triple-quoted string", self.line)
        i = qpos + 1
        while i < len(text):
            c = text[i]
            if c == "\\":
                i += 2
                continue
            if c == quote:
                return i + 1
            if c == "\n":
                break
            i += 1
        raise LexError("unterminated string literal", self.line)


def tokenize(text: str, language: str) -> list[Token]:
    """Split ``text`` into tokens; raises ``LexError`` on unterminated comments or strings."""
    if language not in KEYWORDS:
        raise UnsupportedLanguage(language)
    return _Scanner(text, language).run()
