"""Text file format for invariant complex models.

A model file declares a Lie algebra by structure equations on dual
generators, an (almost) complex structure J, and optional fundamental
(1,1)-forms:

    # Inoue surface
    algebra inoue_s0
    dim 4
    basis alpha_1 beta_1 gamma_1 gamma_2
    d alpha_1 = 0
    d beta_1 = -1 alpha_1^beta_1
    d gamma_1 = 1/2 alpha_1^gamma_1 + 1 alpha_1^gamma_2
    d gamma_2 = -1 alpha_1^gamma_1 + 1/2 alpha_1^gamma_2
    J: alpha_1 -> beta_1, gamma_1 -> gamma_2
    metric standard = 1 alpha_1^beta_1 + 1 gamma_1^gamma_2

Grammar (comments run from ``#`` to end of line):

    rational ::= ['-'] digits ['/' digits]
    term     ::= rational ident '^' ident
    sum      ::= '0' | term (('+' | '-') term)*
    jimage   ::= ['-'] ident | rational ident (('+' | '-') rational ident)*

A pair entry ``x -> y`` in the J block implies ``J(y) = -x`` when no
image for ``y`` is given.  Parsing validates everything: Jacobi identity,
unimodularity, J^2 = -Id, integrability, and positive-definiteness of
each declared metric.  ``export`` emits the canonical form, which
round-trips through ``parse`` identically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .exterior import (
    ComplexStructure,
    Form,
    HermitianMetric,
    LieAlgebraPresentation,
)

__all__ = ["ParseError", "FileValidationError", "ParsedModel", "parse", "export"]


class ParseError(ValueError):
    """Syntax error with exact source position."""

    def __init__(self, line: int, col: int, expected: str):
        self.line = line
        self.col = col
        self.expected = expected
        super().__init__(f"line {line}, column {col}: expected {expected}")


class FileValidationError(ValueError):
    """The file parses but describes an invalid model."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class ParsedModel:
    name: str
    presentation: LieAlgebraPresentation
    structure: ComplexStructure
    metric_forms: Mapping[str, Form] = field(default_factory=dict)

    def metric(self, label: str = "standard") -> HermitianMetric:
        return HermitianMetric(self.structure, self.metric_forms[label])


# -- tokenizer ---------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<rational>\d+/\d+|\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<arrow>->)|(?P<punct>[\^+\-=:,]))"
)


def _tokenize(text: str, line_no: int):
    """Token stream for one source line: (kind, value, column)."""
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            col = pos + (len(text[pos:]) - len(stripped)) + 1
            raise ParseError(line_no, col, "a token")
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return out


class _Cursor:
    def __init__(self, tokens, line_no, line_len):
        self.tokens = tokens
        self.line = line_no
        self.end_col = line_len + 1
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self, kind: str, expected: str, value: str | None = None):
        tok = self.peek()
        if tok is None:
            raise ParseError(self.line, self.end_col, expected)
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise ParseError(self.line, tok[2], expected)
        self.i += 1
        return tok

    def at_end(self):
        return self.i >= len(self.tokens)

    def require_end(self):
        tok = self.peek()
        if tok is not None:
            raise ParseError(self.line, tok[2], "end of line")


def _parse_rational(cur: _Cursor, allow_sign: bool = True) -> Fraction:
    sign = 1
    tok = cur.peek()
    if allow_sign and tok is not None and tok[0] == "punct" and tok[1] == "-":
        sign = -1
        cur.i += 1
    tok = cur.next("rational", "a rational number")
    try:
        return sign * Fraction(tok[1])
    except ZeroDivisionError:
        raise ParseError(cur.line, tok[2], "a nonzero denominator") from None


def _parse_sum(cur: _Cursor, names: dict[str, int]):
    """sum ::= 0 | term ((+|-) term)*, term ::= rational ident ^ ident."""
    tok = cur.peek()
    if tok is not None and tok[0] == "rational" and tok[1] == "0" and cur.i + 1 == len(cur.tokens):
        cur.i += 1
        return []
    terms = []
    sign = 1
    while True:
        c = sign * _parse_rational(cur, allow_sign=(not terms))
        a = cur.next("ident", "a generator name")
        if a[1] not in names:
            raise ParseError(cur.line, a[2], "a declared generator name")
        cur.next("punct", "'^'", "^")
        b = cur.next("ident", "a generator name")
        if b[1] not in names:
            raise ParseError(cur.line, b[2], "a declared generator name")
        terms.append((c, a[1], b[1]))
        tok = cur.peek()
        if tok is None:
            return terms
        if tok[0] == "punct" and tok[1] in "+-":
            sign = 1 if tok[1] == "+" else -1
            cur.i += 1
            continue
        raise ParseError(cur.line, tok[2], "'+', '-' or end of line")


def _parse_jimage(cur: _Cursor, names: dict[str, int]):
    """jimage ::= [-] ident | rational ident ((+|-) rational ident)*.

    Returns a list of (coefficient, generator name) pairs.
    """
    terms = []
    sign = 1
    first = True
    while True:
        tok = cur.peek()
        if tok is None:
            raise ParseError(cur.line, cur.end_col, "a J image")
        if tok[0] == "punct" and tok[1] == "-" and first:
            sign = -1
            cur.i += 1
            tok = cur.peek()
            if tok is None:
                raise ParseError(cur.line, cur.end_col, "a J image")
        if tok[0] == "ident":
            cur.i += 1
            if tok[1] not in names:
                raise ParseError(cur.line, tok[2], "a declared generator name")
            terms.append((Fraction(sign), tok[1]))
        elif tok[0] == "rational":
            c = sign * _parse_rational(cur, allow_sign=False)
            g = cur.next("ident", "a generator name")
            if g[1] not in names:
                raise ParseError(cur.line, g[2], "a declared generator name")
            terms.append((c, g[1]))
        else:
            raise ParseError(cur.line, tok[2], "a J image")
        first = False
        tok = cur.peek()
        if tok is None or (tok[0] == "punct" and tok[1] == ","):
            return terms
        if tok[0] == "punct" and tok[1] in "+-":
            sign = 1 if tok[1] == "+" else -1
            cur.i += 1
            continue
        raise ParseError(cur.line, tok[2], "'+', '-', ',' or end of line")


# -- parser -------------------------------------------------------------------


def parse(text: str) -> ParsedModel:
    lines = text.split("\n")
    logical = []  # (line_no, raw stripped of comments)
    for no, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            logical.append((no, body))

    idx = 0

    def cursor(expected: str) -> _Cursor:
        nonlocal idx
        if idx >= len(logical):
            last = logical[-1][0] if logical else 1
            raise ParseError(last + 1, 1, expected)
        no, body = logical[idx]
        idx += 1
        return _Cursor(_tokenize(body, no), no, len(body.rstrip()))

    # header
    cur = cursor("'algebra <name>'")
    cur.next("ident", "'algebra'", "algebra")
    name = cur.next("ident", "an algebra name")[1]
    cur.require_end()

    cur = cursor("'dim <even integer>'")
    cur.next("ident", "'dim'", "dim")
    dim = int(_parse_rational(cur, allow_sign=False))
    cur.require_end()
    if dim <= 0 or dim % 2:
        raise ParseError(cur.line, 1, "a positive even dimension")

    cur = cursor("'basis <names...>'")
    cur.next("ident", "'basis'", "basis")
    gen_names = []
    while not cur.at_end():
        gen_names.append(cur.next("ident", "a generator name")[1])
    if len(gen_names) != dim or len(set(gen_names)) != dim:
        raise ParseError(cur.line, 1, f"{dim} distinct generator names")
    names = {n: k for k, n in enumerate(gen_names)}

    # structure equations
    diff: dict[str, list] = {}
    d_line: dict[str, int] = {}
    for _ in gen_names:
        cur = cursor("'d <generator> = ...'")
        cur.next("ident", "'d'", "d")
        g = cur.next("ident", "a generator name")
        if g[1] not in names:
            raise ParseError(cur.line, g[2], "a declared generator name")
        if g[1] in diff:
            raise ParseError(cur.line, g[2], "an undifferentiated generator")
        cur.next("punct", "'='", "=")
        diff[g[1]] = _parse_sum(cur, names)
        cur.require_end()
        d_line[g[1]] = cur.line

    # J block: one or more 'J:' lines of comma-separated entries
    j_cols: dict[str, list] = {}
    j_line = None
    while idx < len(logical) and logical[idx][1].split()[0].rstrip(":") == "J":
        cur = cursor("'J: <gen> -> <image>, ...'")
        j_line = cur.line
        cur.next("ident", "'J'", "J")
        cur.next("punct", "':'", ":")
        while True:
            g = cur.next("ident", "a generator name")
            if g[1] not in names:
                raise ParseError(cur.line, g[2], "a declared generator name")
            if g[1] in j_cols:
                raise ParseError(cur.line, g[2], "an unmapped generator")
            cur.next("arrow", "'->'")
            j_cols[g[1]] = _parse_jimage(cur, names)
            if cur.at_end():
                break
            cur.next("punct", "','", ",")
    if j_line is None:
        no = logical[idx][0] if idx < len(logical) else (logical[-1][0] + 1)
        raise ParseError(no, 1, "a 'J:' block")

    # infer the partner image for plain pair entries x -> ±y
    for g, image in list(j_cols.items()):
        if len(image) == 1 and abs(image[0][0]) == 1:
            c, h = image[0]
            if h not in j_cols:
                j_cols[h] = [(-c, g)]
    missing = [g for g in gen_names if g not in j_cols]
    if missing:
        raise FileValidationError(j_line, f"no J image for generator '{missing[0]}'")

    # metrics
    metric_terms: dict[str, tuple[int, list]] = {}
    while idx < len(logical):
        cur = cursor("'metric <label> = ...'")
        cur.next("ident", "'metric'", "metric")
        label = cur.next("ident", "a metric label")
        if label[1] in metric_terms:
            raise ParseError(cur.line, label[2], "a fresh metric label")
        cur.next("punct", "'='", "=")
        metric_terms[label[1]] = (cur.line, _parse_sum(cur, names))
        cur.require_end()

    # validation
    presentation = LieAlgebraPresentation.from_dict(gen_names, diff)
    report = presentation.validate()
    if not report.ok:
        if report.jacobi_failures:
            g = report.jacobi_failures[0]
            raise FileValidationError(d_line[g], f"d^2 != 0 on generator {g}")
        nonzero = [g for g, v in zip(gen_names, report.modular_form) if v]
        line = d_line[nonzero[0]] if nonzero else d_line[gen_names[0]]
        raise FileValidationError(
            line,
            "structure equations are not unimodular: modular form "
            f"{tuple(report.modular_form)}",
        )

    j_matrix = [[Fraction(0)] * dim for _ in range(dim)]
    for g, image in j_cols.items():
        for c, h in image:
            j_matrix[names[h]][names[g]] += c
    try:
        structure = ComplexStructure(presentation, j_matrix)
    except ValueError as exc:
        raise FileValidationError(j_line, str(exc)) from exc

    metric_forms = {}
    for label, (no, terms) in metric_terms.items():
        omega = Form.from_terms(presentation, 2, [(c, (a, b)) for c, a, b in terms])
        try:
            HermitianMetric(structure, omega)
        except ValueError as exc:
            raise FileValidationError(no, f"metric '{label}': {exc}") from exc
        metric_forms[label] = omega

    return ParsedModel(name, presentation, structure, metric_forms)


# -- exporter -----------------------------------------------------------------


def _format_sum(terms) -> str:
    """terms: iterable of (Fraction coefficient, 'a^b' monomial string)."""
    parts = []
    for c, mono in terms:
        if not parts:
            parts.append(f"{c} {mono}")
        elif c >= 0:
            parts.append(f"+ {c} {mono}")
        else:
            parts.append(f"- {-c} {mono}")
    return " ".join(parts) if parts else "0"


def _compact_notation(presentation: LieAlgebraPresentation) -> str:
    """One-token-per-generator summary of the structure equations,
    e.g. (0,0,0,12) for the real Heisenberg-times-line algebra."""
    wide = presentation.dim > 9
    cols = []
    for terms in presentation.differentials:
        bits = []
        for c, i, j in terms:
            mono = f"{i + 1}.{j + 1}" if wide else f"{i + 1}{j + 1}"
            if c == 1:
                bits.append(f"+{mono}" if bits else mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{'+' if c > 0 and bits else ''}{c}*{mono}")
        cols.append("".join(bits) if bits else "0")
    return "(" + ",".join(cols) + ")"


def _j_entries(structure: ComplexStructure) -> list[str]:
    pres = structure.presentation
    names = pres.names
    dim = pres.dim
    jm = structure.j_matrix
    cols = {}
    for g in range(dim):
        cols[g] = [(jm[i][g], i) for i in range(dim) if jm[i][g]]
    entries = []
    covered = set()
    for g in range(dim):
        if g in covered:
            continue
        image = cols[g]
        if len(image) == 1 and abs(image[0][0]) == 1:
            c, h = image[0]
            if h not in covered and cols[h] == [(-c, g)]:
                sign = "" if c > 0 else "-"
                entries.append(f"{names[g]} -> {sign}{names[h]}")
                covered.update((g, h))
                continue
        body = _format_sum((c, names[i]) for c, i in image)
        entries.append(f"{names[g]} -> {body}")
        covered.add(g)
    return entries


def export(
    name: str,
    presentation: LieAlgebraPresentation,
    structure: ComplexStructure,
    metric_forms: Mapping[str, Form] | None = None,
) -> str:
    """Canonical text form; ``parse(export(...))`` reproduces the model."""
    names = presentation.names
    out = [f"# {name}: structure equations {_compact_notation(presentation)}"]
    out.append(f"algebra {name}")
    out.append(f"dim {presentation.dim}")
    out.append("basis " + " ".join(names))
    for g, terms in enumerate(presentation.differentials):
        body = _format_sum((c, f"{names[i]}^{names[j]}") for c, i, j in terms)
        out.append(f"d {names[g]} = {body}")
    out.append("J: " + ", ".join(_j_entries(structure)))
    for label, omega in (metric_forms or {}).items():
        terms = [
            (c.re, f"{names[i]}^{names[j]}")
            for (i, j), c in zip(presentation.basis(2), omega.coeffs)
            if c
        ]
        out.append(f"metric {label} = {_format_sum(terms)}")
    return "\n".join(out) + "\n"
