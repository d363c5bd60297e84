"""Turn parsed blocks into algebras, Poisson structures, Hopf algebras and actions."""
from __future__ import annotations

import os
from fractions import Fraction
from importlib import resources

from ..defquant import (FilteredPresentation, HPoly, HSeries, commutative, lie_enveloping, moyal,
                        quantum_poly, rees_of_filtered, rewriting)
from ..errors import InputError
from ..exactalg import Poly, RatFn
from ..hopfact.action import HopfAction
from ..hopfact.hopf import HopfAlgebra, cyclic_group, group_algebra, sweedler
from ..poisson import PoissonStructure
from .parser import ExpSeries, Ident, parse, parse_expr

BUILTIN_HOPF = {"sweedler": sweedler}


def _names(value, what):
    if isinstance(value, Ident):
        return (value.name,)
    if not isinstance(value, tuple) or not all(isinstance(v, Ident) for v in value):
        raise InputError(f"{what} must be a list of identifiers")
    return tuple(v.name for v in value)


def _int(value, what):
    if not isinstance(value, Fraction) or value.denominator != 1 or value < 0:
        raise InputError(f"{what} must be a non-negative integer")
    return int(value)


def to_poly(value, vars):
    """Entry value as a Poly over ``vars`` (plus ``h`` when present)."""
    if isinstance(value, Ident):
        value = Poly.var(value.name, (value.name,))
    elif isinstance(value, Fraction):
        return Poly.const(value, vars)
    if not isinstance(value, Poly):
        raise InputError(f"expected a polynomial, got {value!r}")
    extra = [v for v in value.used_vars() if v not in vars and v != "h"]
    if extra:
        raise InputError(f"unknown variable(s) {', '.join(extra)}")
    full = vars + (("h",) if "h" in value.used_vars() else ())
    return value.with_vars(full)


def to_series(value, order):
    if isinstance(value, ExpSeries):
        return HSeries.exp(value.rate, order)
    if isinstance(value, Fraction):
        return HSeries((value,) + (0,) * order)
    p = to_poly(value, ())
    return HSeries.from_poly(p, order)


def _order(block, override):
    if override is not None:
        return override
    if "order" not in block.entries:
        raise InputError(f"algebra {block.name!r} needs an order (or pass --order)")
    return _int(block.get("order"), "order")


def filtered_of(block):
    vars = _names(block.get("vars"), "vars")
    degrees = {v: 0 for v in vars}
    for (v,), d in block.calls("degree"):
        if v not in vars:
            raise InputError(f"degree of unknown variable {v!r}")
        degrees[v] = _int(d, f"degree({v})")
    rels = {}
    for args, rhs in block.calls("rel"):
        if len(args) != 2:
            raise InputError("rel(b, a) takes two variables")
        rels[args] = to_poly(rhs, vars)
        if "h" in rels[args].vars:
            raise InputError("filtered relations may not mention h")
    return FilteredPresentation(vars, degrees, rels)


def build_algebra(block, order=None):
    if block.kind != "algebra":
        raise InputError(f"expected an algebra block, got {block.kind}")
    kind = block.get("kind")
    kind = kind.name if isinstance(kind, Ident) else kind
    N = _order(block, order)
    if kind == "moyal":
        pairs = block.get("pairs")
        if not isinstance(pairs, tuple):
            raise InputError("moyal algebra needs pairs = [[x, y], ...]")
        pairs = [_names(p, "pair") for p in pairs]
        if any(len(p) != 2 for p in pairs):
            raise InputError("each Moyal pair has two variables")
        vars = _names(block.get("vars"), "vars") if "vars" in block.entries else None
        return moyal(pairs, N, vars)
    vars = _names(block.get("vars"), "vars")
    if kind == "quantum":
        q = {args: to_series(v, N) for args, v in block.calls("q")}
        return quantum_poly(vars, q, N)
    if kind == "lie":
        br = {}
        for args, v in block.calls("bracket"):
            br[args] = to_poly(v, vars)
        return lie_enveloping(vars, br, N)
    if kind == "rewriting":
        rules = {args: HPoly.from_hpoly_expr(to_poly(v, vars), vars, N)
                 for args, v in block.calls("rule")}
        degrees = None
        if block.calls("degree"):
            degrees = {v: 0 for v in vars}
            for (v,), d in block.calls("degree"):
                degrees[v] = _int(d, f"degree({v})")
        return rewriting(vars, rules, N, degrees)
    if kind == "filtered":
        return rees_of_filtered(filtered_of(block), N)
    if kind == "commutative":
        return commutative(vars, N)
    raise InputError(f"unknown algebra kind {kind!r}")


def build_poisson(block):
    vars = _names(block.get("vars"), "vars")
    br = {args: to_poly(v, vars) for args, v in block.calls("bracket")}
    for p in br.values():
        if "h" in p.vars:
            raise InputError("Poisson brackets may not mention h")
    return PoissonStructure.from_names(vars, br)


def _hopf_vector(H, value):
    if isinstance(value, Fraction):
        return tuple(value * c for c in H.unit)
    p = to_poly(value, tuple(v for v in H.labels if v.isidentifier()))
    out = [Fraction(0)] * H.dim
    for e, c in p.terms.items():
        if sum(e) != 1:
            if not any(e):
                for i, u in enumerate(H.unit):
                    out[i] += c * u
                continue
            raise InputError("Hopf elements are linear combinations of basis labels")
        out[H.index(p.vars[e.index(1)])] += c
    return tuple(out)


def build_hopf(block):
    builtin = block.get("builtin")
    if builtin is not None:
        name = builtin.name if isinstance(builtin, Ident) else str(builtin)
        if name == "cyclic":
            return cyclic_group(_int(block.get("n"), "n"))
        if name in BUILTIN_HOPF:
            return BUILTIN_HOPF[name]()
        raise InputError(f"unknown builtin Hopf algebra {name!r}")
    if "group" in block.entries:
        table = [[_int(x, "table entry") for x in row] for row in block.get("group")]
        labels = _names(block.get("basis"), "basis") if "basis" in block.entries else None
        return group_algebra(table, labels, name=block.name)
    labels = _names(block.get("basis"), "basis")
    d = len(labels)
    proto = HopfAlgebra(labels, [[(0,) * d] * d] * d, (0,) * d, [{}] * d, (0,) * d, [(0,) * d] * d)
    vec = lambda v: _hopf_vector(proto, v)
    unit = vec(block.get("unit"))
    mul = [[(Fraction(0),) * d for _ in range(d)] for _ in range(d)]
    for (a, b), v in block.calls("mul"):
        mul[proto.index(a)][proto.index(b)] = vec(v)
    comul = [{} for _ in range(d)]
    for (a,), v in block.calls("comul"):
        for term in v:
            if len(term) != 3:
                raise InputError("comul entries are [left, right, coeff] triples")
            p, q, c = term
            key = (proto.index(p.name), proto.index(q.name))
            comul[proto.index(a)][key] = comul[proto.index(a)].get(key, 0) + c
    counit = [Fraction(0)] * d
    for (a,), v in block.calls("counit"):
        counit[proto.index(a)] = v
    antipode = [(Fraction(0),) * d for _ in range(d)]
    for (a,), v in block.calls("antipode"):
        antipode[proto.index(a)] = vec(v)
    return HopfAlgebra(labels, mul, unit, comul, counit, antipode, name=block.name)


def resolve_hopf(ref, doc=None):
    """A Hopf algebra from a builtin name (``sweedler``, ``Z2``, ``Z3``...) or a document block."""
    if isinstance(ref, Ident):
        ref = ref.name
    if ref in BUILTIN_HOPF:
        return BUILTIN_HOPF[ref]()
    if isinstance(ref, str) and ref[:1] == "Z" and ref[1:].isdigit():
        return cyclic_group(int(ref[1:]))
    if doc is not None:
        return build_hopf(doc.find("hopf", ref))
    raise InputError(f"unknown Hopf algebra {ref!r}")


def build_action(block, algebra, hopf):
    table = {}
    for args, v in block.entries.items():
        if "(" not in args:
            continue
        label, _, rest = args.partition("(")
        var = rest.rstrip(")").strip()
        hopf.index(label)
        if var not in algebra.variables:
            raise InputError(f"action on unknown generator {var!r}")
        val = v if isinstance(v, Fraction) else to_poly(v, algebra.variables)
        if isinstance(val, Fraction):
            val = Poly.const(val, algebra.variables)
        table[(label, var)] = algebra.element(val)
    return HopfAction(hopf, algebra, table)


def parse_elem(text, vars):
    """A RatFn over ``vars`` from an element string such as ``x*y/z``."""
    v = parse_expr(text, allow_div=True)
    if isinstance(v, Fraction):
        return RatFn(Poly.const(v, vars))
    if isinstance(v, Poly):
        v = RatFn(v)
    extra = [x for x in v.num.used_vars() + v.den.used_vars() if x not in vars]
    if extra:
        raise InputError(f"unknown variable(s) {', '.join(sorted(set(extra)))}")
    return v.with_vars(vars)


def parse_poly(text, vars, allow_h=False):
    v = parse_expr(text)
    if isinstance(v, Fraction):
        return Poly.const(v, vars)
    extra = [x for x in v.used_vars() if x not in vars and not (allow_h and x == "h")]
    if extra:
        raise InputError(f"unknown variable(s) {', '.join(extra)}")
    return v.with_vars(vars + (("h",) if allow_h and "h" in v.used_vars() else ()))


# -- corpus -----------------------------------------------------------------------

def corpus_names():
    return sorted(p.name for p in resources.files("deformata.data").iterdir()
                  if p.name.split(".")[-1] in ("alg", "poi", "hopf", "act"))


def corpus_text(name):
    return resources.files("deformata.data").joinpath(name).read_text(encoding="utf-8")


def read_source(path, stdin=None):
    """File contents; ``-`` reads stdin, bare corpus names fall back to packaged data."""
    if path == "-":
        import sys
        return (stdin or sys.stdin).read()
    if os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    base = os.path.basename(path)
    if base in corpus_names():
        return corpus_text(base)
    raise InputError(f"no such file: {path}")


def load_doc(path, stdin=None):
    return parse(read_source(path, stdin))


__all__ = ["build_algebra", "build_poisson", "build_hopf", "build_action", "resolve_hopf",
           "filtered_of", "parse_elem", "parse_poly", "to_poly", "to_series", "corpus_names",
           "corpus_text", "read_source", "load_doc"]
