"""The 21 method-level metrics.

Line metrics come from the raw text of the method span; everything else
is counted on the token stream. Java is the reference language; C++ and
Python share the same definitions at lexer fidelity.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass, fields

from .lexer import SourceFile, Token, TokenKind
from .segment import MethodRecord

CSV_COLUMNS = [
    "method_id", "name", "ext", "start_line", "end_line", "tloc", "sloc_whbl", "nloc",
    "nloc_whbl", "sloc_statements", "token_count", "full_parameters", "numArg", "dataArg",
    "numOper", "numOperands", "total_Var", "numLoops", "CCN", "numMethCall", "has_return",
    "totalReturn", "returnDataType",
]
FEATURE_NAMES = CSV_COLUMNS[2:]
TEXT_FEATURES = ("full_parameters", "dataArg", "returnDataType", "ext")

DECISION_TOKENS = {
    "java": frozenset(["if", "for", "while", "do", "case", "catch", "?", "&&", "||"]),
    "cpp": frozenset(["if", "for", "while", "do", "case", "catch", "?", "&&", "||"]),
    "python": frozenset(["if", "elif", "for", "while", "except", "and", "or"]),
}
ARITHMETIC = frozenset(["+", "-", "*", "/", "%", "++", "--", "+=", "-=", "*=", "/=", "%="])
PY_ARITHMETIC = ARITHMETIC | {"**", "//", "**=", "//="}
DELIMITERS = frozenset(["{", "}", "(", ")", "[", "]", ";", ","])
LIBRARY_STARTS = {
    "java": frozenset(["import", "package"]),
    "cpp": frozenset(["using"]),
    "python": frozenset(["import", "from"]),
}

JAVA_PRIMITIVES = frozenset("int long short byte char boolean float double void".split())
CPP_TYPE_WORDS = frozenset(
    "int long short char bool float double void unsigned signed auto wchar_t char8_t "
    "char16_t char32_t".split()
)
CPP_QUALIFIERS = frozenset(
    "const volatile static constexpr register thread_local mutable extern inline".split()
)
_LITERALS = (TokenKind.NUMERIC, TokenKind.STRING, TokenKind.CHAR)


@dataclass(frozen=True)
class MetricVector:
    tloc: int
    sloc_whbl: int
    nloc: int
    nloc_whbl: int
    sloc_statements: int
    token_count: int
    start_line: int
    end_line: int
    full_parameters: str
    numArg: int
    dataArg: str
    numOper: int
    numOperands: int
    total_Var: int
    numLoops: int
    ccn: int
    numMethCall: int
    has_return: int
    totalReturn: int
    returnDataType: str
    ext: str

    def as_row(self) -> dict[str, object]:
        """Values keyed by CSV column name (metrics only)."""
        d = {f.name: getattr(self, f.name) for f in fields(self)}
        d["CCN"] = d.pop("ccn")
        return {name: d[name] for name in FEATURE_NAMES}

    @classmethod
    def from_row(cls, row: dict[str, object]) -> "MetricVector":
        kw = {f.name: row["CCN" if f.name == "ccn" else f.name] for f in fields(cls)}
        return cls(**kw)

    def __iter__(self):
        return iter(astuple(self))


def compute_ccn(method: MethodRecord) -> int:
    decisions = DECISION_TOKENS[method.language]
    return 1 + sum(
        1 for t in method.tokens
        if t.text in decisions and t.kind is not TokenKind.IDENTIFIER and t.kind not in _LITERALS
    )


def line_metrics(method: MethodRecord, file: SourceFile) -> dict[str, int]:
    lines = file.lines
    first, last = method.start_line, method.end_line
    covered: set[int] = set()
    statement: set[int] = set()
    first_token: dict[int, Token] = {}
    for t in method.tokens:
        span = range(t.line, t.last_line + 1)
        covered.update(span)
        if t.text not in DELIMITERS:
            statement.update(span)
        first_token.setdefault(t.line, t)
    libs = LIBRARY_STARTS[method.language]
    blank = comment = library = 0
    for n in range(first, last + 1):
        text = lines[n - 1] if n - 1 < len(lines) else ""
        if not text.strip():
            blank += 1
        elif n not in covered:
            comment += 1
        else:
            head = first_token.get(n)
            if head is not None and _is_library_line(head, method, libs):
                library += 1
    tloc = last - first + 1
    nloc = tloc - comment - library
    return {
        "tloc": tloc,
        "sloc_whbl": tloc - blank,
        "nloc": nloc,
        "nloc_whbl": nloc - blank,
        "sloc_statements": len(statement & set(range(first, last + 1))),
    }


def _is_library_line(head: Token, method: MethodRecord, libs) -> bool:
    if head.kind is TokenKind.KEYWORD and head.text in libs:
        return True
    if method.language == "cpp" and head.text == "#":
        idx = method.tokens.index(head)
        nxt = method.tokens[idx + 1] if idx + 1 < len(method.tokens) else None
        return nxt is not None and nxt.text == "include" and nxt.line == head.line
    return False


# --- C-family token analysis -------------------------------------------------


def _skip_generic(body, i: int) -> int | None:
    """``body[i]`` is '<'; return the index after the matching '>' or None."""
    depth = 0
    n = len(body)
    while i < n:
        t = body[i]
        x = t.text
        if x == "<":
            depth += 1
        elif x in (">", ">>", ">>>"):
            depth -= len(x)
            if depth <= 0:
                return i + 1 if depth == 0 else None
        elif not (
            t.kind in (TokenKind.IDENTIFIER, TokenKind.KEYWORD, TokenKind.NUMERIC)
            or x in (",", ".", "?", "[", "]", "&", "::", "*")
        ):
            return None
        i += 1
    return None


def _parse_type(body, i: int, lang: str) -> tuple[int, list[int]] | None:
    """Parse a type starting at ``body[i]``; return (index after it, identifier indices)."""
    n = len(body)
    idents: list[int] = []
    if lang == "java":
        while i < n and body[i].text == "final":
            i += 1
        if i >= n:
            return None
        t = body[i]
        if not (t.kind is TokenKind.IDENTIFIER or (t.kind is TokenKind.KEYWORD and t.text in JAVA_PRIMITIVES)):
            return None
        start = i
        i += 1
        while i + 1 < n and body[i].text == "." and body[i + 1].kind is TokenKind.IDENTIFIER:
            i += 2
        if i < n and body[i].text == "<":
            j = _skip_generic(body, i)
            if j is None:
                return None
            i = j
        while i + 1 < n and body[i].text == "[" and body[i + 1].text == "]":
            i += 2
        idents = [k for k in range(start, i) if body[k].kind is TokenKind.IDENTIFIER]
        return i, idents
    # C++
    while i < n and body[i].text in CPP_QUALIFIERS:
        i += 1
    if i < n and body[i].text in ("struct", "class", "enum", "typename"):
        i += 1
    if i >= n:
        return None
    start = i
    if body[i].kind is TokenKind.KEYWORD and body[i].text in CPP_TYPE_WORDS:
        while i < n and body[i].kind is TokenKind.KEYWORD and body[i].text in CPP_TYPE_WORDS:
            i += 1
    else:
        if body[i].text == "::":
            i += 1
        if i >= n or body[i].kind is not TokenKind.IDENTIFIER:
            return None
        while True:
            i += 1
            if i < n and body[i].text == "<":
                j = _skip_generic(body, i)
                if j is None:
                    return None
                i = j
            if i + 1 < n and body[i].text == "::" and body[i + 1].kind is TokenKind.IDENTIFIER:
                i += 1
                continue
            break
    idents = [k for k in range(start, i) if body[k].kind is TokenKind.IDENTIFIER]
    while i < n and body[i].text in ("const", "volatile", "*", "&", "&&"):
        i += 1
    return i, idents


def _skip_initializer(body, j: int) -> int:
    depth = 0
    n = len(body)
    while j < n:
        x = body[j].text
        if x in ("(", "[", "{"):
            depth += 1
        elif x in (")", "]", "}"):
            if depth == 0:
                return j
            depth -= 1
        elif depth == 0 and x in (",", ";"):
            return j
        j += 1
    return j


def _declarators(body, p: int, lang: str, in_for: bool) -> list[int]:
    """Indices of variable names declared from ``body[p]`` (a name) onwards."""
    n = len(body)
    followers = {"=", ";", ",", "["}
    if lang == "cpp":
        followers |= {"(", "{"}
    if in_for:
        followers.add(":")
    if p + 1 >= n or body[p + 1].text not in followers:
        return []
    names = [p]
    j = p + 1
    while j < n:
        x = body[j].text
        if x == "[":
            while j < n and body[j].text == "[":
                j += 1
                depth = 1
                while j < n and depth:
                    if body[j].text == "[":
                        depth += 1
                    elif body[j].text == "]":
                        depth -= 1
                    j += 1
            continue
        if x in ("=", "(", "{"):
            if x == "=":
                j = _skip_initializer(body, j + 1)
            else:
                j = _skip_initializer(body, j + 1) + 1
            continue
        if x == ",":
            k = j + 1
            while lang == "cpp" and k < n and body[k].text in ("*", "&", "&&"):
                k += 1
            if (
                k + 1 < n
                and body[k].kind is TokenKind.IDENTIFIER
                and body[k + 1].text in followers - {":"}
            ):
                names.append(k)
                j = k + 1
                continue
        break
    return names


@dataclass
class _BodyScan:
    declared: list[int]
    excluded: set[int]
    calls: list[int]


def _paren_matches(body) -> dict[int, int]:
    match: dict[int, int] = {}
    stack: list[int] = []
    for i, t in enumerate(body):
        if t.text == "(":
            stack.append(i)
        elif t.text == ")" and stack:
            match[stack.pop()] = i
    return match


def _scan_c_family(body, lang: str, own_name: str) -> _BodyScan:
    """Locate local declarations, call sites and type-name identifiers in a body.

    Declarations are recognised at statement starts as ``Type name`` followed
    by one of ``= ; , [`` (plus ``:`` in a for header, ``( {`` in C++).
    Parameters of ``catch`` clauses and of methods declared inside the body
    (anonymous classes) have their types excluded from operands but are not
    counted as local variables.
    """
    n = len(body)
    parens = _paren_matches(body)
    decl_prev = JAVA_PRIMITIVES if lang == "java" else CPP_TYPE_WORDS | {"void"}
    excluded: set[int] = set()
    calls: list[int] = []
    param_lists: list[int] = []
    for i, t in enumerate(body):
        if t.kind is TokenKind.KEYWORD and t.text == "new":
            j = i + 1
            while j < n and (body[j].kind is TokenKind.IDENTIFIER or body[j].text in (".", "::")):
                if body[j].kind is TokenKind.IDENTIFIER:
                    excluded.add(j)
                j += 1
            if j < n and body[j].text == "<":
                end = _skip_generic(body, j) or j
                excluded.update(k for k in range(j, end) if body[k].kind is TokenKind.IDENTIFIER)
            continue
        if t.text == "@" and i + 1 < n:
            excluded.add(i + 1)
            continue
        if t.kind is not TokenKind.IDENTIFIER:
            continue
        prev = body[i - 1] if i > 0 else None
        nxt = i + 1
        if nxt < n and body[nxt].text == "<" and prev is not None and prev.text in ("new", "."):
            nxt = _skip_generic(body, nxt) or nxt
        if nxt >= n or body[nxt].text != "(":
            continue
        if prev is not None and (
            prev.kind is TokenKind.IDENTIFIER or prev.text in decl_prev or prev.text in ("]", ">")
        ):
            close = parens.get(nxt)
            after = body[close + 1].text if close is not None and close + 1 < n else ""
            if after in ("{", "throws", "const", "override", "noexcept"):
                # a method declared inside the body (anonymous or local class)
                excluded.add(i)
                param_lists.append(nxt)
            continue
        excluded.add(i)
        if t.text != own_name:
            calls.append(i)

    starts: dict[int, str] = {0: "stmt"}
    head = None
    for i, t in enumerate(body):
        x = t.text
        if i in starts:
            head = x
        if x in ("{", "}", ";"):
            starts.setdefault(i + 1, "stmt")
        elif x == "(" and i > 0 and body[i - 1].text in ("for", "try", "catch"):
            starts[i + 1] = {"for": "for", "try": "stmt", "catch": "param"}[body[i - 1].text]
        elif x == ":" and head in ("case", "default"):
            starts.setdefault(i + 1, "stmt")
    for p in param_lists:
        starts[p + 1] = "param"
        depth = 0
        for j in range(p + 1, parens.get(p, p)):
            x = body[j].text
            if x in ("(", "[", "{", "<"):
                depth += 1
            elif x in (")", "]", "}", ">"):
                depth -= 1
            elif x == "," and depth == 0:
                starts[j + 1] = "param"

    declared: list[int] = []
    for s, mode in sorted(starts.items()):
        if s >= n:
            continue
        parsed = _parse_type(body, s, lang)
        if parsed is None:
            continue
        end, idents = parsed
        if end >= n or body[end].kind is not TokenKind.IDENTIFIER:
            continue
        if mode == "param":
            if end + 1 < n and body[end + 1].text in (",", ")", "["):
                excluded.update(idents)
            continue
        names = _declarators(body, end, lang, mode == "for")
        if names:
            declared.extend(names)
            excluded.update(idents)
    return _BodyScan(declared, excluded, calls)


def _operands_c_family(body, scan: _BodyScan) -> int:
    count = 0
    for i, t in enumerate(body):
        if t.kind in _LITERALS:
            count += 1
        elif t.kind is TokenKind.IDENTIFIER and i not in scan.excluded:
            count += 1
    return count


# --- Python token analysis ---------------------------------------------------


def _python_logical_lines(body) -> list[list[Token]]:
    out: list[list[Token]] = []
    depth = 0
    prev = None
    for t in body:
        if depth == 0 and (prev is None or t.line > prev.last_line or prev.text == ";"):
            out.append([])
        if t.text in ("(", "[", "{"):
            depth += 1
        elif t.text in (")", "]", "}"):
            depth = max(0, depth - 1)
        if not (depth == 0 and t.text == ";"):
            out[-1].append(t)
        prev = t
    return [line for line in out if line]


def _target_names(tokens) -> list[str]:
    names = []
    depth = 0
    for i, t in enumerate(tokens):
        x = t.text
        if x in ("(", "["):
            # unpacking brackets only at the very start or after a comma
            if i > 0 and tokens[i - 1].text not in (",", "(", "["):
                depth += 100
            depth += 1
            continue
        if x in (")", "]"):
            depth -= 1
            if depth >= 100:
                depth -= 100
            continue
        if depth >= 100 or t.kind is not TokenKind.IDENTIFIER:
            continue
        nxt = tokens[i + 1].text if i + 1 < len(tokens) else ""
        prv = tokens[i - 1].text if i > 0 else ""
        if nxt in (".", "[", "(") or prv == ".":
            continue
        names.append(x)
    return names


def _python_locals(body, params: set[str]) -> set[str]:
    found: set[str] = set()
    excluded: set[str] = set()
    for line in _python_logical_lines(body):
        head = line[0].text
        if head in ("global", "nonlocal"):
            excluded.update(t.text for t in line[1:] if t.kind is TokenKind.IDENTIFIER)
            continue
        if head in ("for", "async"):
            k = 1 if head == "for" else 2
            end = next((q for q, t in enumerate(line) if t.text == "in" and q >= k), None)
            if end is not None:
                found.update(_target_names(line[k:end]))
            continue
        if head == "with":
            for q, t in enumerate(line):
                if t.text == "as" and q + 1 < len(line) and line[q + 1].kind is TokenKind.IDENTIFIER:
                    found.add(line[q + 1].text)
            continue
        depth = 0
        segment_start = 0
        for q, t in enumerate(line):
            x = t.text
            if x in ("(", "[", "{"):
                depth += 1
            elif x in (")", "]", "}"):
                depth -= 1
            elif depth == 0 and x == "=":
                found.update(_target_names(line[segment_start:q]))
                segment_start = q + 1
            elif depth == 0 and x == ":" and q == 1 and line[0].kind is TokenKind.IDENTIFIER:
                # annotated assignment
                found.add(line[0].text)
        for q, t in enumerate(line):
            if t.text == ":=" and q > 0 and line[q - 1].kind is TokenKind.IDENTIFIER:
                found.add(line[q - 1].text)
    return found - params - excluded


def _python_callees(body) -> list[int]:
    """Indices of identifiers immediately followed by '(' that are not definitions."""
    out = []
    for i, t in enumerate(body):
        if t.kind is not TokenKind.IDENTIFIER or i + 1 >= len(body) or body[i + 1].text != "(":
            continue
        if i > 0 and body[i - 1].text in ("def", "class"):
            continue
        out.append(i)
    return out


def _python_operands(body, callees: list[int]) -> int:
    excluded = set(callees)
    count = 0
    for i, t in enumerate(body):
        if t.kind in _LITERALS:
            count += 1
        elif t.kind is TokenKind.IDENTIFIER and i not in excluded:
            if i > 0 and body[i - 1].text in ("def", "class"):
                continue
            count += 1
    return count


def _python_has_value_return(body) -> bool:
    for i, t in enumerate(body):
        if t.text == "return" and t.kind is TokenKind.KEYWORD:
            nxt = body[i + 1] if i + 1 < len(body) else None
            if nxt is not None and nxt.line == t.last_line and nxt.text != ";":
                return True
    return False


def compute_metrics(method: MethodRecord, file: SourceFile) -> MetricVector:
    lang = method.language
    body = method.body
    lm = line_metrics(method, file)
    params = method.parameters
    if lang == "python":
        callees = _python_callees(body)
        calls = [i for i in callees if body[i].text != method.short_name]
        total_var = len(_python_locals(body, {p.name for p in params}))
        operands = _python_operands(body, callees)
        has_return = int(_python_has_value_return(body))
        arithmetic = PY_ARITHMETIC
    else:
        scan = _scan_c_family(body, lang, method.short_name)
        calls = scan.calls
        total_var = len(scan.declared)
        operands = _operands_c_family(body, scan)
        has_return = int(method.return_type not in ("", "void"))
        arithmetic = ARITHMETIC
    return MetricVector(
        tloc=lm["tloc"],
        sloc_whbl=lm["sloc_whbl"],
        nloc=lm["nloc"],
        nloc_whbl=lm["nloc_whbl"],
        sloc_statements=lm["sloc_statements"],
        token_count=len(method.tokens),
        start_line=method.start_line,
        end_line=method.end_line,
        full_parameters=",".join(p.text for p in params),
        numArg=len(params),
        dataArg=",".join(p.type for p in params),
        numOper=sum(1 for t in body if t.kind is TokenKind.OPERATOR and t.text in arithmetic),
        numOperands=operands,
        total_Var=total_var,
        numLoops=sum(1 for t in body if t.kind is TokenKind.KEYWORD and t.text in ("for", "while")),
        ccn=compute_ccn(method),
        numMethCall=len(calls),
        has_return=has_return,
        totalReturn=sum(1 for t in body if t.kind is TokenKind.KEYWORD and t.text == "return"),
        returnDataType=method.return_type,
        ext=file.language,
    )
