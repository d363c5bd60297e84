"""Canonical text forms for expressions and presentation documents.

Every string produced here is accepted by :mod:`deformata.frontend.parser`
and parses back to an equal value.
"""
from __future__ import annotations

from fractions import Fraction


def _mono(vars, e, hpow=0):
    parts = []
    if hpow:
        parts.append("h" if hpow == 1 else f"h^{hpow}")
    for v, k in zip(vars, e):
        if k:
            parts.append(v if k == 1 else f"{v}^{k}")
    return "*".join(parts)


def _join(terms):
    """terms: list of (Fraction coefficient, monomial string)."""
    if not terms:
        return "0"
    out = []
    for n, (c, m) in enumerate(terms):
        neg = c < 0
        a = -c if neg else c
        if not m:
            body = str(a)
        elif a == 1:
            body = m
        else:
            body = f"{a}*{m}"
        if n == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def format_poly(p):
    return _join([(c, _mono(p.vars, e)) for e, c in p.sorted_terms()])


def format_hpoly(hp):
    terms = []
    for t, c in enumerate(hp.coeffs):
        terms.extend((v, _mono(c.vars, e, t)) for e, v in c.sorted_terms())
    return _join(terms)


def format_series(s):
    return _join([(c, _mono((), (), t)) for t, c in enumerate(s.coeffs) if c])


def format_ratfn(r):
    if r.den.is_constant():
        return format_poly(r.num.scale(1 / r.den.constant_value()))
    num = format_poly(r.num)
    if len(r.num.terms) > 1:
        num = f"({num})"
    den = format_poly(r.den)
    simple = (len(r.den.terms) == 1 and r.den.leading_coeff() == 1
              and len(r.den.used_vars()) <= 1)
    if not simple:
        den = f"({den})"
    return f"{num}/{den}"


def format_value(v):
    from ..exactalg import Poly, RatFn
    from .parser import ExpSeries, Ident
    if isinstance(v, str):
        return '"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(v, Ident):
        return v.name
    if isinstance(v, ExpSeries):
        c = v.rate
        return f"exp({c}*h)" if c != 1 else "exp(h)"
    if isinstance(v, tuple):
        return "[" + ", ".join(format_value(x) for x in v) + "]"
    if isinstance(v, Poly):
        return format_poly(v)
    if isinstance(v, RatFn):
        return format_ratfn(v)
    if isinstance(v, (int, Fraction)):
        return str(v)
    raise TypeError(f"cannot format {v!r}")


def format_document(doc):
    lines = []
    for block in doc.blocks:
        lines.append(f"{block.kind} {block.name} {{")
        for key, value in block.entries.items():
            lines.append(f"  {key} = {format_value(value)}")
        lines.append("}")
        lines.append("")
    return "\n".join(lines)
