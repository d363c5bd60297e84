"""Tokenizer and recursive-descent parser for presentation documents.

A document is a sequence of blocks::

    algebra skew3 {
      kind = quantum
      vars = [x, y, z]
      q(x, y) = exp(h)
    }

Entry values are lists, identifiers, rationals, strings, polynomial
expressions (``h`` stands for ℏ) or ``exp(c*h)`` series.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import InputError
from ..exactalg import Poly, RatFn

KINDS = ("algebra", "poisson", "hopf", "action")


class ParseError(InputError):
    def __init__(self, msg, line=None, col=None):
        self.line, self.col = line, col
        where = f"line {line}, column {col}: " if line is not None else ""
        super().__init__(where + msg)


@dataclass(frozen=True)
class Ident:
    name: str


@dataclass(frozen=True)
class ExpSeries:
    """exp(rate·ℏ), expanded at build time to the algebra's order."""
    rate: Fraction


@dataclass
class Block:
    kind: str
    name: str
    entries: dict
    line: int = 0

    def get(self, key, default=None):
        return self.entries.get(key, default)

    def calls(self, head):
        """Entries ``head(args) = value`` as a list of (args, value)."""
        out = []
        for k, v in self.entries.items():
            m = re.fullmatch(rf"{head}\((.*)\)", k)
            if m:
                out.append((tuple(a.strip() for a in m.group(1).split(",")), v))
        return out

    def __eq__(self, other):
        return (isinstance(other, Block) and (self.kind, self.name) == (other.kind, other.name)
                and self.entries.keys() == other.entries.keys()
                and all(_value_eq(self.entries[k], other.entries[k]) for k in self.entries))


def _value_eq(a, b):
    if isinstance(a, tuple) and isinstance(b, tuple):
        return len(a) == len(b) and all(_value_eq(x, y) for x, y in zip(a, b))
    if type(a) is not type(b):
        return False
    return a == b


@dataclass
class PresentationDoc:
    blocks: list = field(default_factory=list)

    def find(self, kind, name=None):
        for b in self.blocks:
            if b.kind == kind and (name is None or b.name == name):
                return b
        what = f"{kind} block" + (f" {name!r}" if name else "")
        raise InputError(f"no {what} in document")

    def names(self):
        return [(b.kind, b.name) for b in self.blocks]

    def __eq__(self, other):
        return isinstance(other, PresentationDoc) and self.blocks == other.blocks


# -- tokens ------------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+) | (?P<nl>\n) | (?P<comment>\#[^\n]*)
  | (?P<num>\d+) | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<op>[{}()\[\],=+\-*/^])
""", re.VERBOSE)


@dataclass(frozen=True)
class Tok:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text):
    out = []
    line, start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            start = m.end()
        elif kind not in ("ws", "comment"):
            out.append(Tok(kind, m.group(), line, m.start() - start + 1))
        pos = m.end()
    out.append(Tok("eof", "", line, pos - start + 1))
    return out


# -- expressions ----------------------------------------------------------------

class _Parser:
    def __init__(self, toks, allow_div=False):
        self.toks = toks
        self.i = 0
        self.allow_div = allow_div

    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.col)

    def take(self, text=None, kind=None):
        t = self.tok
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = repr(text) if text is not None else kind
            self.error(f"expected {want}, found {t.text or 'end of input'!r}")
        self.i += 1
        return t

    def at(self, text):
        return self.tok.text == text and self.tok.kind in ("op",)

    # expr := term (('+'|'-') term)*
    def expr(self):
        neg = False
        if self.at("-"):
            self.take("-")
            neg = True
        elif self.at("+"):
            self.take("+")
        acc = self.term()
        if neg:
            acc = -acc
        while self.at("+") or self.at("-"):
            op = self.take().text
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    # term := factor (('*'|'/') factor)*
    def term(self):
        acc = self.factor()
        while self.at("*") or self.at("/"):
            op = self.take()
            rhs = self.factor()
            if op.text == "*":
                acc = acc * rhs
                continue
            if not self.allow_div:
                if isinstance(rhs, Fraction) and isinstance(acc, Fraction):
                    if rhs == 0:
                        self.error("division by zero", op)
                    acc = acc / rhs
                    continue
                self.error("division is only allowed in element expressions", op)
            if _is_zero(rhs):
                self.error("division by zero", op)
            acc = _as_rat(acc) / _as_rat(rhs)
        return acc

    # factor := base ('^' NAT)?
    def factor(self):
        base = self.base()
        if self.at("^"):
            self.take("^")
            t = self.take(kind="num")
            base = base ** int(t.text)
        return base

    def base(self):
        t = self.tok
        if t.kind == "num":
            self.take()
            return Fraction(int(t.text))
        if t.kind == "ident":
            self.take()
            if t.text == "exp" and self.at("("):
                self.error("exp(...) is only allowed as a whole entry value", t)
            return Poly.var(t.text, (t.text,))
        if self.at("("):
            self.take("(")
            v = self.expr()
            self.take(")")
            return v
        if self.at("-"):
            self.take("-")
            return -self.factor()
        self.error(f"unexpected {t.text or 'end of input'!r} in expression")


def _is_zero(v):
    return v == 0 if isinstance(v, Fraction) else v.is_zero()


def _as_rat(v):
    if isinstance(v, RatFn):
        return v
    if isinstance(v, Fraction):
        return RatFn(Poly.const(v, ()))
    return RatFn(v)


def _canonical(v):
    """Collapse constants to Fraction and bare variables to Ident."""
    if isinstance(v, RatFn):
        if v.is_poly():
            v = v.num
        else:
            return v
    if isinstance(v, Poly):
        if v.is_constant():
            return v.constant_value()
        used = v.used_vars()
        if len(used) == 1 and len(v.terms) == 1 and v.leading_coeff() == 1 and v.degree() == 1:
            return Ident(used[0])
        return v.with_vars(used)
    return v


def parse_expr(text, allow_div=False):
    """Parse a standalone expression; returns Fraction, Poly or (with ``allow_div``) RatFn."""
    p = _Parser(tokenize(text), allow_div)
    v = p.expr()
    if p.tok.kind != "eof":
        p.error(f"unexpected {p.tok.text!r} after expression")
    return v


# -- document ----------------------------------------------------------------------

def _value(p):
    t = p.tok
    if t.kind == "string":
        p.take()
        return json.loads(t.text)
    if p.at("["):
        p.take("[")
        items = []
        if not p.at("]"):
            items.append(_value(p))
            while p.at(","):
                p.take(",")
                items.append(_value(p))
        p.take("]")
        return tuple(items)
    if t.kind == "ident" and t.text == "exp" and p.toks[p.i + 1].text == "(":
        p.take()
        p.take("(")
        inner = p.expr()
        close = p.take(")")
        rate = _exp_rate(inner)
        if rate is None:
            p.error("exp(...) expects c*h with a rational c", close)
        return ExpSeries(rate)
    return _canonical(p.expr())


def _exp_rate(v):
    if isinstance(v, Poly):
        if v.used_vars() == ("h",) and v.degree() == 1 and not v.terms.get((0,) * len(v.vars)):
            return v.with_vars(("h",)).terms[(1,)]
    return None


def _key(p):
    name = p.take(kind="ident").text
    if p.at("("):
        p.take("(")
        args = [p.take(kind="ident").text]
        while p.at(","):
            p.take(",")
            args.append(p.take(kind="ident").text)
        p.take(")")
        return f"{name}({', '.join(args)})"
    return name


def parse(text):
    p = _Parser(tokenize(text))
    doc = PresentationDoc()
    seen = set()
    while p.tok.kind != "eof":
        kt = p.take(kind="ident")
        if kt.text not in KINDS:
            p.error(f"unknown block kind {kt.text!r} (expected one of {', '.join(KINDS)})", kt)
        name = p.take(kind="ident").text
        if (kt.text, name) in seen:
            p.error(f"duplicate {kt.text} block {name!r}", kt)
        seen.add((kt.text, name))
        p.take("{")
        entries = {}
        while not p.at("}"):
            kt2 = p.tok
            key = _key(p)
            if key in entries:
                p.error(f"duplicate entry {key!r}", kt2)
            p.take("=")
            entries[key] = _value(p)
        p.take("}")
        doc.blocks.append(Block(kt.text, name, entries, kt.line))
    return doc


def parse_file(path):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


__all__ = ["ParseError", "Ident", "ExpSeries", "Block", "PresentationDoc", "tokenize",
           "parse", "parse_file", "parse_expr"]
