"""Generate the bundled synthetic Java corpus and its MR labels.

Every method belongs to a family of numeric array routines (sum, mean,
max, variance, weighted sum, ...). Each family has a Python reference
implementation; a label is 1 when the relation held on every one of a thousand
random positive inputs, 0 otherwise. Surface variants (loop style,
guards, identifiers, element type, extra parameters) vary the mined metrics
without changing the semantics.

    python scripts/make_synthetic_corpus.py --out corpus --seed 42
"""

from __future__ import annotations

import argparse
import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

import numpy as np

MRS = ("ADD", "EXC", "INC", "MUL", "PER", "INV")
LOW, HIGH = 1.0, 16.0


@dataclass(frozen=True)
class Variant:
    arr: str
    idx: str
    acc: str
    loop: str  # "for", "each" or "while"
    elem: str  # "double" or "int"
    guard: bool
    doc: bool
    length_param: bool

    @property
    def n(self) -> str:
        return "n" if self.length_param else f"{self.arr}.length"

    def header(self, ret: str, name: str, extra: str = "") -> str:
        params = [f"{self.elem}[] {self.arr}"]
        if self.length_param:
            params.append("int n")
        if extra:
            params.append(extra)
        return f"public static {ret} {name}({', '.join(params)}) {{"

    def guard_lines(self, value: str) -> list[str]:
        if not self.guard:
            return []
        return [f"if ({self.arr} == null || {self.n} == 0) {{", f"    return {value};", "}"]

    def loop_over(self, body: Callable[[str], list[str]], indexed: bool = False) -> list[str]:
        style = "for" if indexed and self.loop == "each" else self.loop
        a, i = self.arr, self.idx
        if style == "each":
            inner = body("v")
            return [f"for ({self.elem} v : {a}) {{"] + _indent(inner) + ["}"]
        inner = body(f"{a}[{i}]")
        if style == "for":
            return [f"for (int {i} = 0; {i} < {self.n}; {i}++) {{"] + _indent(inner) + ["}"]
        return [f"int {i} = 0;", f"while ({i} < {self.n}) {{"] + _indent(inner + [f"{i}++;"]) + ["}"]


def _indent(lines: list[str], by: int = 1) -> list[str]:
    return ["    " * by + line if line else line for line in lines]


@dataclass(frozen=True)
class Family:
    stem: str
    ref: Callable[..., float]
    java: Callable[[Variant, str], list[str]]
    extra: tuple[str, Callable[[np.random.Generator], float]] | None = None
    indexed: bool = False


def _sum(v, e):
    return [f"double {v.acc} = 0;"] + v.loop_over(lambda x: [f"{v.acc} += {x};"])


def j_sum(v, name):
    return [v.header("double", name)] + _indent(v.guard_lines("0") + _sum(v, "") + [f"return {v.acc};"]) + ["}"]


def j_mean(v, name):
    return [v.header("double", name)] + _indent(
        v.guard_lines("0") + _sum(v, "") + [f"return {v.acc} / {v.n};"]) + ["}"]


def _extreme(v, name, op, ret_expr=None):
    body = [f"double best = {v.arr}[0];"] + v.loop_over(
        lambda x: [f"if ({x} {op} best) {{", f"    best = {x};", "}"])
    return [v.header("double", name)] + _indent(v.guard_lines("0") + body + [f"return {ret_expr or 'best'};"]) + ["}"]


def j_max(v, name):
    return _extreme(v, name, ">")


def j_min(v, name):
    return _extreme(v, name, "<")


def j_range(v, name):
    body = [f"double hi = {v.arr}[0];", f"double lo = {v.arr}[0];"] + v.loop_over(
        lambda x: [f"hi = Math.max(hi, {x});", f"lo = Math.min(lo, {x});"])
    return [v.header("double", name)] + _indent(v.guard_lines("0") + body + ["return hi - lo;"]) + ["}"]


def j_sum_squares(v, name):
    body = [f"double {v.acc} = 0;"] + v.loop_over(lambda x: [f"{v.acc} += {x} * {x};"])
    return [v.header("double", name)] + _indent(v.guard_lines("0") + body + [f"return {v.acc};"]) + ["}"]


def j_l2(v, name):
    body = [f"double {v.acc} = 0;"] + v.loop_over(lambda x: [f"{v.acc} += {x} * {x};"])
    return [v.header("double", name)] + _indent(
        v.guard_lines("0") + body + [f"return Math.sqrt({v.acc});"]) + ["}"]


def _variance_body(v):
    mean = [f"double {v.acc} = 0;"] + v.loop_over(lambda x: [f"{v.acc} += {x};"])
    mean += [f"double mean = {v.acc} / {v.n};", "double dev = 0;"]
    second = Variant(v.arr, "k", v.acc, "for" if v.loop == "while" else v.loop, v.elem,
                     v.guard, v.doc, v.length_param)
    mean += second.loop_over(lambda x: [f"double d = {x} - mean;", "dev += d * d;"])
    return mean


def j_variance(v, name):
    return [v.header("double", name)] + _indent(
        v.guard_lines("0") + _variance_body(v) + [f"return dev / {v.n};"]) + ["}"]


def j_std(v, name):
    return [v.header("double", name)] + _indent(
        v.guard_lines("0") + _variance_body(v) + [f"return Math.sqrt(dev / {v.n});"]) + ["}"]


def j_geo(v, name):
    body = [f"double {v.acc} = 0;"] + v.loop_over(lambda x: [f"{v.acc} += Math.log({x});"])
    return [v.header("double", name)] + _indent(
        v.guard_lines("0") + body + [f"return Math.exp({v.acc} / {v.n});"]) + ["}"]


def j_harmonic(v, name):
    body = [f"double {v.acc} = 0;"] + v.loop_over(lambda x: [f"{v.acc} += 1.0 / {x};"])
    return [v.header("double", name)] + _indent(
        v.guard_lines("0") + body + [f"return {v.n} / {v.acc};"]) + ["}"]


def j_reciprocal_sum(v, name):
    body = [f"double {v.acc} = 0;"] + v.loop_over(lambda x: [f"{v.acc} += 1.0 / {x};"])
    return [v.header("double", name)] + _indent(v.guard_lines("0") + body + [f"return {v.acc};"]) + ["}"]


def j_count_above(v, name):
    body = ["int count = 0;"] + v.loop_over(lambda x: [f"if ({x} > limit) {{", "    count++;", "}"])
    return [v.header("int", name, "double limit")] + _indent(
        v.guard_lines("0") + body + ["return count;"]) + ["}"]


def j_count_in_range(v, name):
    body = ["int count = 0;"] + v.loop_over(
        lambda x: [f"if ({x} >= lo && {x} <= hi) {{", "    count++;", "}"])
    return [v.header("int", name, "double lo, double hi")] + _indent(
        v.guard_lines("0") + body + ["return count;"]) + ["}"]


def j_clipped_sum(v, name):
    body = [f"double {v.acc} = 0;"] + v.loop_over(lambda x: [f"{v.acc} += Math.min({x}, cap);"])
    return [v.header("double", name, "double cap")] + _indent(
        v.guard_lines("0") + body + [f"return {v.acc};"]) + ["}"]


def j_weighted(v, name):
    i = v.idx
    body = [f"double {v.acc} = 0;"] + v.loop_over(lambda x: [f"{v.acc} += ({i} + 1) * {x};"], indexed=True)
    return [v.header("double", name)] + _indent(v.guard_lines("0") + body + [f"return {v.acc};"]) + ["}"]


def j_first(v, name):
    return [v.header("double", name)] + _indent(v.guard_lines("0") + [f"return {v.arr}[0];"]) + ["}"]


def j_last(v, name):
    return [v.header("double", name)] + _indent(
        v.guard_lines("0") + [f"return {v.arr}[{v.n} - 1];"]) + ["}"]


def j_adjacent(v, name):
    a, i = v.arr, v.idx
    body = ["double best = 0;", f"for (int {i} = 1; {i} < {v.n}; {i}++) {{",
            f"    double gap = Math.abs({a}[{i}] - {a}[{i} - 1]);",
            "    if (gap > best) {", "        best = gap;", "    }", "}"]
    return [v.header("double", name)] + _indent(v.guard_lines("0") + body + ["return best;"]) + ["}"]


def j_horner(v, name):
    body = [f"double {v.acc} = 0;"] + v.loop_over(lambda x: [f"{v.acc} = {v.acc} * point + {x};"])
    return [v.header("double", name, "double point")] + _indent(
        v.guard_lines("0") + body + [f"return {v.acc};"]) + ["}"]


def j_mirror_dot(v, name):
    a, i = v.arr, v.idx
    body = [f"double {v.acc} = 0;", f"for (int {i} = 0; {i} < {v.n}; {i}++) {{",
            f"    {v.acc} += {a}[{i}] * {a}[{v.n} - 1 - {i}];", "}"]
    return [v.header("double", name)] + _indent(v.guard_lines("0") + body + [f"return {v.acc};"]) + ["}"]


def j_distinct(v, name):
    a, i = v.arr, v.idx
    body = ["int count = 0;", f"for (int {i} = 0; {i} < {v.n}; {i}++) {{",
            "    boolean seen = false;", f"    for (int j = 0; j < {i}; j++) {{",
            f"        if ({a}[j] == {a}[{i}]) {{", "            seen = true;", "            break;",
            "        }", "    }", "    if (!seen) {", "        count++;", "    }", "}"]
    return [v.header("int", name)] + _indent(v.guard_lines("0") + body + ["return count;"]) + ["}"]


def j_median(v, name):
    a, i, t = v.arr, v.idx, v.elem
    body = [f"{t}[] s = {a}.clone();", f"for (int {i} = 0; {i} < s.length; {i}++) {{",
            f"    for (int j = 0; j + 1 < s.length - {i}; j++) {{", "        if (s[j] > s[j + 1]) {",
            f"            {t} tmp = s[j];", "            s[j] = s[j + 1];", "            s[j + 1] = tmp;",
            "        }", "    }", "}", "int mid = s.length / 2;",
            "if (s.length % 2 == 1) {", "    return s[mid];", "}", "return (s[mid - 1] + s[mid]) / 2.0;"]
    return [v.header("double", name)] + _indent(v.guard_lines("0") + body) + ["}"]


def j_second_largest(v, name):
    body = ["double first = Double.NEGATIVE_INFINITY;", "double second = Double.NEGATIVE_INFINITY;"]
    body += v.loop_over(lambda x: [f"if ({x} > first) {{", "    second = first;", f"    first = {x};",
                                   f"}} else if ({x} > second) {{", f"    second = {x};", "}"])
    body += ["return second == Double.NEGATIVE_INFINITY ? first : second;"]
    return [v.header("double", name)] + _indent(v.guard_lines("0") + body) + ["}"]


def j_mad(v, name):
    mean = [f"double {v.acc} = 0;"] + v.loop_over(lambda x: [f"{v.acc} += {x};"])
    mean += [f"double mean = {v.acc} / {v.n};", "double dev = 0;"]
    second = Variant(v.arr, "k", v.acc, "for" if v.loop == "while" else v.loop, v.elem,
                     v.guard, v.doc, v.length_param)
    mean += second.loop_over(lambda x: [f"dev += Math.abs({x} - mean);"])
    return [v.header("double", name)] + _indent(v.guard_lines("0") + mean + [f"return dev / {v.n};"]) + ["}"]


def j_log_sum(v, name):
    body = [f"double {v.acc} = 0;"] + v.loop_over(lambda x: [f"{v.acc} += Math.log({x});"])
    return [v.header("double", name)] + _indent(v.guard_lines("0") + body + [f"return {v.acc};"]) + ["}"]


def j_ratio(v, name):
    body = [f"double hi = {v.arr}[0];", f"double lo = {v.arr}[0];"] + v.loop_over(
        lambda x: [f"if ({x} > hi) {{", f"    hi = {x};", "}", f"if ({x} < lo) {{", f"    lo = {x};", "}"])
    return [v.header("double", name)] + _indent(v.guard_lines("0") + body + ["return hi / lo;"]) + ["}"]


def j_index_of_max(v, name):
    a, i = v.arr, v.idx
    body = ["int pos = 0;", f"for (int {i} = 1; {i} < {v.n}; {i}++) {{",
            f"    if ({a}[{i}] > {a}[pos]) {{", f"        pos = {i};", "    }", "}"]
    return [v.header("int", name)] + _indent(v.guard_lines("-1") + body + ["return pos;"]) + ["}"]


def j_window_max(v, name):
    a, i = v.arr, v.idx
    body = ["int w = Math.min(width, " + v.n + ");", "double best = Double.NEGATIVE_INFINITY;",
            f"for (int {i} = 0; {i} + w <= {v.n}; {i}++) {{", "    double s = 0;",
            "    for (int j = 0; j < w; j++) {", f"        s += {a}[{i} + j];", "    }",
            "    best = Math.max(best, s / w);", "}"]
    return [v.header("double", name, "int width")] + _indent(v.guard_lines("0") + body + ["return best;"]) + ["}"]


def j_alternating(v, name):
    a, i = v.arr, v.idx
    body = [f"double {v.acc} = 0;", f"for (int {i} = 0; {i} < {v.n}; {i}++) {{",
            f"    if ({i} % 2 == 0) {{", f"        {v.acc} += {a}[{i}];", "    } else {",
            f"        {v.acc} -= {a}[{i}];", "    }", "}"]
    return [v.header("double", name)] + _indent(v.guard_lines("0") + body + [f"return {v.acc};"]) + ["}"]


def j_product(v, name):
    body = [f"double {v.acc} = 1;"] + v.loop_over(lambda x: [f"{v.acc} *= {x};"])
    return [v.header("double", name)] + _indent(v.guard_lines("1") + body + [f"return {v.acc};"]) + ["}"]


def _draw(rng, size=None):
    """Log-uniform on [LOW, HIGH], rounded to two decimals."""
    return np.round(np.exp(rng.uniform(np.log(LOW), np.log(HIGH), size)), 2)


def j_count_below(v, name):
    body = ["int count = 0;"] + v.loop_over(lambda x: [f"if ({x} < limit) {{", "    count++;", "}"])
    return [v.header("int", name, "double limit")] + _indent(
        v.guard_lines("0") + body + ["return count;"]) + ["}"]


def j_cv(v, name):
    body = _variance_body(v) + ["if (mean == 0) {", "    return 0;", "}",
                                f"return Math.sqrt(dev / {v.n}) / mean;"]
    return [v.header("double", name)] + _indent(v.guard_lines("0") + body) + ["}"]


def j_nearest(v, name):
    body = ["double best = Double.MAX_VALUE;"] + v.loop_over(
        lambda x: [f"double d = Math.abs({x} - target);", "if (d < best) {", "    best = d;", "}"])
    return [v.header("double", name, "double target")] + _indent(v.guard_lines("0") + body + ["return best;"]) + ["}"]


def j_deficit(v, name):
    body = [f"double {v.acc} = 0;"] + v.loop_over(
        lambda x: [f"if ({x} < goal) {{", f"    {v.acc} += goal - {x};", "}"])
    return [v.header("double", name, "double goal")] + _indent(
        v.guard_lines("0") + body + [f"return {v.acc};"]) + ["}"]


def j_first_minus_last(v, name):
    return [v.header("double", name)] + _indent(
        v.guard_lines("0") + [f"return {v.arr}[0] - {v.arr}[{v.n} - 1];"]) + ["}"]


def j_share_of_max(v, name):
    body = [f"double {v.acc} = 0;", "double top = 0;"] + v.loop_over(
        lambda x: [f"{v.acc} += {x};", f"top = Math.max(top, {x});"])
    return [v.header("double", name)] + _indent(
        v.guard_lines("0") + body + [f"return top / {v.acc};"]) + ["}"]


def j_min_reciprocal(v, name):
    body = ["double best = 0;"] + v.loop_over(lambda x: [f"best = Math.max(best, 1.0 / {x});"])
    return [v.header("double", name)] + _indent(v.guard_lines("0") + body + ["return best;"]) + ["}"]


def j_rising(v, name):
    a, i = v.arr, v.idx
    body = ["int count = 0;", f"for (int {i} = 1; {i} < {v.n}; {i}++) {{",
            f"    if ({a}[{i}] > {a}[{i} - 1]) {{", "        count++;", "    }", "}"]
    return [v.header("int", name)] + _indent(v.guard_lines("0") + body + ["return count;"]) + ["}"]


def _pick(rng):
    return float(_draw(rng))


def _median(x, *_):
    return float(np.median(x))


def _second(x, *_):
    s = sorted(x)
    return s[-2] if len(s) > 1 else s[-1]


def _window(x, w):
    w = min(int(w), len(x))
    return max(float(np.mean(x[i:i + w])) for i in range(len(x) - w + 1))


FAMILIES = [
    Family("sum", lambda x: float(np.sum(x)), j_sum),
    Family("mean", lambda x: float(np.mean(x)), j_mean),
    Family("max", lambda x: float(np.max(x)), j_max),
    Family("min", lambda x: float(np.min(x)), j_min),
    Family("range", lambda x: float(np.max(x) - np.min(x)), j_range),
    Family("sumSquares", lambda x: float(np.sum(x * x)), j_sum_squares),
    Family("norm", lambda x: float(np.sqrt(np.sum(x * x))), j_l2),
    Family("variance", lambda x: float(np.var(x)), j_variance),
    Family("stdDev", lambda x: float(np.std(x)), j_std),
    Family("geoMean", lambda x: float(np.exp(np.mean(np.log(x)))), j_geo),
    Family("harmonicMean", lambda x: float(len(x) / np.sum(1 / x)), j_harmonic),
    Family("reciprocalSum", lambda x: float(np.sum(1 / x)), j_reciprocal_sum),
    Family("countAbove", lambda x, t: float(np.sum(x > t)), j_count_above, ("limit", _pick)),
    Family("countInRange", lambda x, lo: float(np.sum((x >= lo) & (x <= lo + 5))), j_count_in_range,
           ("lo", _pick)),
    Family("clippedSum", lambda x, c: float(np.sum(np.minimum(x, c))), j_clipped_sum, ("cap", _pick)),
    Family("weightedSum", lambda x: float(np.sum(np.arange(1, len(x) + 1) * x)), j_weighted, indexed=True),
    Family("first", lambda x: float(x[0]), j_first),
    Family("last", lambda x: float(x[-1]), j_last),
    Family("maxGap", lambda x: float(np.max(np.abs(np.diff(x)), initial=0.0)), j_adjacent),
    Family("horner", lambda x, p: float(np.polyval(x, p)), j_horner, ("point", lambda r: float(r.uniform(0.1, 0.9)))),
    Family("mirrorDot", lambda x: float(np.sum(x * x[::-1])), j_mirror_dot),
    Family("countDistinct", lambda x: float(len(set(np.round(x, 0)))), j_distinct),
    Family("median", _median, j_median),
    Family("secondLargest", _second, j_second_largest),
    Family("meanAbsDev", lambda x: float(np.mean(np.abs(x - np.mean(x)))), j_mad),
    Family("logSum", lambda x: float(np.sum(np.log(x))), j_log_sum),
    Family("spreadRatio", lambda x: float(np.max(x) / np.min(x)), j_ratio),
    Family("indexOfMax", lambda x: float(np.argmax(x)), j_index_of_max),
    Family("windowMax", _window, j_window_max, ("width", lambda r: float(r.integers(2, 4)))),
    Family("alternatingSum", lambda x: float(np.sum(x[::2]) - np.sum(x[1::2])), j_alternating),
    Family("product", lambda x: float(np.prod(x)), j_product),
    Family("countBelow", lambda x, t: float(np.sum(x < t)), j_count_below, ("limit", _pick)),
    Family("coeffVariation", lambda x: float(np.std(x) / np.mean(x)), j_cv),
    Family("nearestGap", lambda x, t: float(np.min(np.abs(x - t))), j_nearest, ("target", _pick)),
    Family("deficit", lambda x, g: float(np.sum(np.maximum(g - x, 0))), j_deficit, ("goal", _pick)),
    Family("firstMinusLast", lambda x: float(x[0] - x[-1]), j_first_minus_last),
    Family("shareOfMax", lambda x: float(np.max(x) / np.sum(x)), j_share_of_max),
    Family("maxReciprocal", lambda x: float(np.max(1 / x)), j_min_reciprocal),
    Family("risingSteps", lambda x: float(np.sum(np.diff(x) > 0)), j_rising),
]


def _close(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=1e-9, abs_tol=1e-9)


def _le(a: float, b: float) -> bool:
    return a <= b or _close(a, b)


def label_family(fam: Family, rng: np.random.Generator, trials: int = 1000) -> dict[str, int]:
    """Empirical MR applicability: 1 when the relation held on every trial."""
    held = dict.fromkeys(MRS, True)
    for _ in range(trials):
        n = int(rng.integers(2, 10))
        x = _draw(rng, n)
        args = () if fam.extra is None else (fam.extra[1](rng),)
        f = lambda z: fam.ref(np.asarray(z, dtype=float), *args)  # noqa: E731
        base = f(x)
        c = float(rng.uniform(1.0, 10.0))
        m = float(rng.uniform(1.5, 5.0))
        drop = int(rng.integers(0, n))
        checks = {
            "ADD": _le(base, f(x + c)),
            "EXC": _le(f(np.delete(x, drop)), base),
            "INC": _le(base, f(np.append(x, _draw(rng)))),
            "MUL": _le(base, f(x * m)),
            "PER": _close(base, f(rng.permutation(x))),
            "INV": _le(f(1.0 / x), base),
        }
        for mr, ok in checks.items():
            held[mr] = held[mr] and ok
    return {mr: int(ok) for mr, ok in held.items()}


NAMES = ("values", "data", "xs", "nums", "samples", "items", "arr", "series")
ACCS = ("total", "acc", "result", "s", "running")
IDX = ("i", "idx", "p")
DOCS = ("Computes the {stem} of the given values.", "Returns the {stem}.", "Helper for {stem} statistics.")


def make_variant(rng: np.random.Generator) -> Variant:
    return Variant(
        arr=str(rng.choice(NAMES)),
        idx=str(rng.choice(IDX)),
        acc=str(rng.choice(ACCS)),
        loop=str(rng.choice(["for", "each", "while"], p=[0.5, 0.3, 0.2])),
        elem=str(rng.choice(["double", "int"], p=[0.7, 0.3])),
        guard=bool(rng.random() < 0.4),
        doc=bool(rng.random() < 0.5),
        length_param=bool(rng.random() < 0.2),
    )


def generate(out: Path, seed: int, per_family: int, per_class: int) -> tuple[int, dict[str, int]]:
    rng = np.random.default_rng(seed)
    labels = {f.stem: label_family(f, np.random.default_rng([seed, i])) for i, f in enumerate(FAMILIES)}
    methods = []
    for fam in FAMILIES:
        for k in range(per_family):
            v = make_variant(rng)
            if v.length_param and fam.java in (j_median,):
                v = Variant(v.arr, v.idx, v.acc, v.loop, v.elem, v.guard, v.doc, False)
            name = f"{fam.stem}{k + 1}"
            lines = []
            if v.doc:
                lines += ["/**", f" * {str(rng.choice(DOCS)).format(stem=fam.stem)}", " */"]
            lines += fam.java(v, name)
            methods.append((fam.stem, name, lines))
    order = rng.permutation(len(methods))
    methods = [methods[i] for i in order]

    src = out / "java"
    src.mkdir(parents=True, exist_ok=True)
    for old in src.glob("*.java"):
        old.unlink()
    rows = []
    for c in range(0, len(methods), per_class):
        cls = f"Numeric{c // per_class:02d}"
        text = [f"package corpus;", "", f"public final class {cls} {{", ""]
        for stem, name, lines in methods[c:c + per_class]:
            start = len(text) + 1 + (3 if lines[0] == "/**" else 0)
            text += _indent(lines) + [""]
            rows.append((f"java/{cls}.java::{name}#{start}", labels[stem]))
        text += ["}", ""]
        (src / f"{cls}.java").write_text("\n".join(text), encoding="utf-8")

    with open(out / "labels.csv", "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
        fh.write(",".join(("method_id",) + MRS) + "\n")
        for mid, lab in rows:
            w.writerow([mid] + [lab[mr] for mr in MRS])
    counts = {mr: sum(lab[mr] for _, lab in rows) for mr in MRS}
    return len(rows), counts


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", type=Path, default=Path("corpus"))
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--per-family", type=int, default=6)
    parser.add_argument("--per-class", type=int, default=8)
    args = parser.parse_args(argv)
    n, counts = generate(args.out, args.seed, args.per_family, args.per_class)
    print(f"wrote {n} methods to {args.out}; positives per MR: {counts}")


if __name__ == "__main__":
    main()
