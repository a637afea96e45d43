"""Text format for orbit spaces, Seifert data, matrices and configurations.

One document per file; ``#`` starts a comment::

    orbitspace4 {
      sphere a=1
      arc b'=0 seifert=(2,1) b''=-1
    }
    seifert3 { b=0 eps=o g=0 hbar=1 t=0 seifert=(2,1),(2,1) }
    matrix { n=2 rows=0 1 / 1 0 }
    config { fix=s2+2pt arc=[0;(2,1);-1] }

Items of an ``orbitspace4`` body are ``sphere a=``, ``point b=``,
``arc b'= seifert= b''=`` and ``circle seifert=``.  Matrix rows are separated
by ``/`` or line breaks.  A ``config`` takes ``fix=`` one of ``s2``,
``s2+pt`` (optional ``sign=``), ``s2+s2`` (with ``omega=``) or ``s2+2pt``
(with ``signs=`` or ``arc=``).

Every error carries a stable code and a line/column position.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .classify3 import SeifertOrbitData
from .classify4 import SphereOnly, SpherePlusPoint, SpherePlusTwoPoints, TwoSpheres
from .errors import OrbitCalcError
from .intforms import IntSymMatrix
from .orbit_data import (
    IsolatedFixedPoint,
    SeifertInvariant,
    WeightedArc,
    WeightedCircle,
    WeightedOrbitSpace,
    WeightedSphere,
)

__all__ = ["Document", "DocumentError", "parse", "parse_plain_matrix", "serialize", "KINDS"]

KINDS = ("orbitspace4", "seifert3", "matrix", "config")
MAX_DIGITS = 1000


class DocumentError(OrbitCalcError):
    """Problem in an input document, with its position."""

    def __init__(self, message, line=None, column=None, code="E_PARSE"):
        self.code = code
        self.line = line
        self.column = column
        self.message = message
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class Document:
    kind: str
    payload: object
    locations: dict = field(default_factory=dict, compare=False)


_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nl>\n)
  | (?P<int>[+-]?\d+)
  | (?P<word>[A-Za-z_][A-Za-z0-9_'+]*)
  | (?P<punct>[{}()\[\],;/=])
""", re.VERBOSE)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    out, pos, line, line_start = [], 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise DocumentError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            out.append(_Tok("nl", "\n", line, pos - line_start + 1))
            line, line_start = line + 1, m.end()
        elif kind == "int" and len(m.group()) > MAX_DIGITS:
            raise DocumentError(f"integer literal longer than {MAX_DIGITS} digits", line, pos - line_start + 1)
        elif kind not in ("ws", "comment"):
            out.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    out.append(_Tok("eof", "", line, pos - line_start + 1))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, skip_nl=True):
        if skip_nl:
            while self.toks[self.i].kind == "nl":
                self.i += 1
        return self.toks[self.i]

    def next(self, skip_nl=True):
        tok = self.peek(skip_nl)
        if tok.kind != "eof":
            self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return DocumentError(message, tok.line, tok.col)

    def expect(self, text, skip_nl=True):
        tok = self.next(skip_nl)
        if tok.text != text or tok.kind == "eof":
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise DocumentError(f"expected {text!r}, found {found}", tok.line, tok.col)
        return tok

    def integer(self):
        tok = self.next()
        if tok.kind != "int":
            raise self.error(f"expected an integer, found {tok.text or 'end of input'!r}", tok)
        return int(tok.text)

    def word(self):
        tok = self.next()
        if tok.kind != "word":
            raise self.error(f"expected a name, found {tok.text or 'end of input'!r}", tok)
        return tok.text

    def pair(self):
        self.expect("(")
        a = self.integer()
        self.expect(",")
        b = self.integer()
        self.expect(")")
        return (a, b)

    def pairs(self):
        out = [self.pair()]
        while self.peek(skip_nl=False).text == ",":
            self.next()
            out.append(self.pair())
        return out

    def bracket_arc(self):
        self.expect("[")
        b1 = self.integer()
        self.expect(";")
        segs = self.pairs()
        self.expect(";")
        b2 = self.integer()
        self.expect("]")
        return (b1, segs, b2)

    def int_pair(self):
        a = self.integer()
        self.expect(",")
        return (a, self.integer())

    def rows(self):
        rows, cur = [], []
        while True:
            tok = self.peek(skip_nl=False)
            if tok.kind == "int":
                cur.append(int(self.next(False).text))
            elif tok.text == "/" or tok.kind == "nl":
                self.next(False)
                if cur:
                    rows.append(cur)
                cur = []
            else:
                break
        if cur:
            rows.append(cur)
        return rows


def _semantic(exc, tok, code=None):
    return DocumentError(str(exc), tok.line, tok.col, code or getattr(exc, "code", "E_PARSE"))


def _key_values(p: _Parser, keys: dict, stop) -> tuple[dict, dict]:
    """Read ``key=value`` pairs while the next token is a key in ``keys``."""
    vals, where = {}, {}
    while True:
        tok = p.peek()
        if tok.kind != "word" or stop(tok):
            break
        if tok.text not in keys:
            raise p.error(f"unknown key {tok.text!r}", tok)
        if tok.text in vals:
            raise p.error(f"duplicate key {tok.text!r}", tok)
        p.next()
        p.expect("=")
        vals[tok.text] = keys[tok.text](p)
        where[tok.text] = tok
    return vals, where


def _require(p, vals, keys, tok):
    missing = [k for k in keys if k not in vals]
    if missing:
        raise DocumentError(f"missing key(s): {', '.join(missing)}", tok.line, tok.col)


_ITEM_KEYS = {
    "sphere": {"a": _Parser.integer},
    "point": {"b": _Parser.integer},
    "arc": {"b'": _Parser.integer, "seifert": _Parser.pairs, "b''": _Parser.integer},
    "circle": {"seifert": _Parser.pairs},
}


def _orbitspace(p: _Parser, head):
    groups = {k: [] for k in _ITEM_KEYS}
    locations = {}
    while p.peek().text != "}":
        tok = p.next()
        if tok.kind != "word" or tok.text not in _ITEM_KEYS:
            raise p.error(f"expected sphere, point, arc or circle, found {tok.text or 'end of input'!r}", tok)
        vals, _ = _key_values(p, _ITEM_KEYS[tok.text], lambda t: t.text in _ITEM_KEYS)
        _require(p, vals, list(_ITEM_KEYS[tok.text]), tok)
        try:
            if tok.text == "sphere":
                item = WeightedSphere(vals["a"])
            elif tok.text == "point":
                item = IsolatedFixedPoint(vals["b"])
            elif tok.text == "arc":
                item = WeightedArc(vals["b'"], [SeifertInvariant(*s) for s in vals["seifert"]], vals["b''"])
            else:
                item = WeightedCircle([SeifertInvariant(*s) for s in vals["seifert"]])
        except OrbitCalcError as exc:
            raise _semantic(exc, tok)
        locations[f"{tok.text} {len(groups[tok.text])}"] = (tok.line, tok.col)
        groups[tok.text].append(item)
    try:
        space = WeightedOrbitSpace(groups["sphere"], groups["point"], groups["arc"], groups["circle"])
    except OrbitCalcError as exc:
        raise _semantic(exc, head)
    return space, locations


def _seifert3(p: _Parser, head):
    keys = {"b": _Parser.integer, "eps": _Parser.word, "g": _Parser.integer,
            "hbar": _Parser.integer, "t": _Parser.integer, "seifert": _Parser.pairs}
    vals, where = _key_values(p, keys, lambda t: False)
    _require(p, vals, ["b", "eps", "g", "hbar", "t"], head)
    if vals["eps"] not in ("o", "n"):
        raise p.error(f"eps must be o or n, found {vals['eps']!r}", where["eps"])
    try:
        data = SeifertOrbitData(vals["b"], vals["eps"], vals["g"], vals["hbar"], vals["t"],
                                tuple(SeifertInvariant(*s) for s in vals.get("seifert", [])))
    except OrbitCalcError as exc:
        raise _semantic(exc, head)
    return data, {}


def _matrix(p: _Parser, head):
    vals, where = _key_values(p, {"n": _Parser.integer, "rows": _Parser.rows}, lambda t: False)
    _require(p, vals, ["n", "rows"], head)
    n, rows = vals["n"], vals["rows"]
    if n < 0:
        raise p.error("n must be nonnegative", where["n"])
    if len(rows) == 1 and n > 1 and len(rows[0]) == n * n:
        rows = [rows[0][i * n:(i + 1) * n] for i in range(n)]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise p.error(f"rows must form a {n}x{n} matrix", where["rows"])
    try:
        return IntSymMatrix(rows), {}
    except ValueError as exc:
        raise _semantic(exc, where["rows"])


_FIX = ("s2", "s2+pt", "s2+s2", "s2+2pt")


def _config(p: _Parser, head):
    keys = {"fix": _Parser.word, "omega": _Parser.integer, "sign": _Parser.integer,
            "signs": _Parser.int_pair, "arc": _Parser.bracket_arc}
    vals, where = _key_values(p, keys, lambda t: False)
    _require(p, vals, ["fix"], head)
    fix = vals["fix"]
    if fix not in _FIX:
        raise p.error(f"fix must be one of {', '.join(_FIX)}, found {fix!r}", where["fix"])
    allowed = {"s2": set(), "s2+pt": {"sign"}, "s2+s2": {"omega"}, "s2+2pt": {"signs", "arc"}}[fix]
    for k in vals:
        if k != "fix" and k not in allowed:
            raise p.error(f"key {k!r} does not apply to fix={fix}", where[k])
    try:
        if fix == "s2":
            cfg = SphereOnly()
        elif fix == "s2+pt":
            cfg = SpherePlusPoint(vals.get("sign", 1))
        elif fix == "s2+s2":
            _require(p, vals, ["omega"], where["fix"])
            cfg = TwoSpheres(vals["omega"])
        else:
            arc = None
            if "arc" in vals:
                b1, segs, b2 = vals["arc"]
                arc = WeightedArc(b1, [SeifertInvariant(*s) for s in segs], b2)
            cfg = SpherePlusTwoPoints(arc=arc, point_signs=vals.get("signs"))
    except OrbitCalcError as exc:
        raise _semantic(exc, where["fix"])
    return cfg, {}


_BODIES = {"orbitspace4": _orbitspace, "seifert3": _seifert3, "matrix": _matrix, "config": _config}


def parse(text) -> Document:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"input is not UTF-8 ({exc.reason} at byte {exc.start})", 1, 1)
    p = _Parser(text)
    head = p.next()
    if head.kind != "word" or head.text not in KINDS:
        raise p.error(f"expected one of {', '.join(KINDS)}, found {head.text or 'end of input'!r}", head)
    p.expect("{")
    payload, locations = _BODIES[head.text](p, head)
    p.expect("}")
    tail = p.next()
    if tail.kind != "eof":
        raise p.error(f"unexpected {tail.text!r} after the document", tail)
    return Document(head.text, payload, locations)


def parse_plain_matrix(text: str) -> IntSymMatrix:
    """Matrix given as ``n`` on the first line and then ``n`` rows."""
    lines = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    lines = [(i + 1, ln) for i, ln in enumerate(lines) if ln]
    if not lines:
        raise DocumentError("empty matrix file", 1, 1)
    try:
        lineno, first = lines[0]
        if len(first) != 1:
            raise DocumentError("first line must hold the size n", lineno, 1)
        n = int(first[0])
        body = lines[1:]
        if n < 0 or len(body) != n:
            raise DocumentError(f"expected {max(n, 0)} rows after the size line", lineno, 1)
        rows = []
        for ln, row in body:
            if len(row) != n:
                raise DocumentError(f"row has {len(row)} entries, expected {n}", ln, 1)
            if any(len(x) > MAX_DIGITS for x in row):
                raise DocumentError(f"integer literal longer than {MAX_DIGITS} digits", ln, 1)
            rows.append([int(x) for x in row])
        return IntSymMatrix(rows)
    except ValueError as exc:
        if isinstance(exc, DocumentError):
            raise
        raise DocumentError(str(exc), lines[0][0], 1)


def _pairs_text(segs):
    return ",".join(f"({s.alpha},{s.beta})" for s in segs)


def _signed(x):
    return f"+{x}" if x > 0 else str(x)


def serialize(doc: Document) -> str:
    v = doc.payload
    if doc.kind == "orbitspace4":
        lines = [f"  sphere a={s.euler}" for s in v.spheres]
        lines += [f"  point b={_signed(p.weight)}" for p in v.points]
        lines += [f"  arc b'={a.b_start} seifert={_pairs_text(a.segments)} b''={a.b_end}" for a in v.arcs]
        lines += [f"  circle seifert={_pairs_text(c.segments)}" for c in v.circles]
        return "orbitspace4 {\n" + "\n".join(lines) + "\n}\n"
    if doc.kind == "seifert3":
        extra = f" seifert={_pairs_text(v.exceptional)}" if v.exceptional else ""
        return f"seifert3 {{ b={v.b} eps={v.epsilon} g={v.g} hbar={v.h_bar} t={v.t}{extra} }}\n"
    if doc.kind == "matrix":
        rows = " / ".join(" ".join(str(x) for x in r) for r in v.rows)
        return f"matrix {{ n={v.n} rows={rows} }}\n"
    if doc.kind == "config":
        if isinstance(v, SphereOnly):
            body = "fix=s2"
        elif isinstance(v, SpherePlusPoint):
            body = f"fix=s2+pt sign={_signed(v.sign)}"
        elif isinstance(v, TwoSpheres):
            body = f"fix=s2+s2 omega={v.omega1}"
        elif v.arc is not None:
            a = v.arc
            body = f"fix=s2+2pt arc=[{a.b_start};{_pairs_text(a.segments)};{a.b_end}]"
        else:
            body = "fix=s2+2pt signs={},{}".format(*map(_signed, v.point_signs))
        return f"config {{ {body} }}\n"
    raise ValueError(f"unknown document kind {doc.kind!r}")
