"""End-to-end reference pipeline over the packaged corpus."""
from __future__ import annotations

from dataclasses import dataclass

from . import galois
from .defquant import dehomogenize
from .exactalg import Poly, RatFn
from .frontend.build import (build_action, build_algebra, build_poisson, corpus_text, filtered_of,
                             resolve_hopf)
from .frontend.parser import parse
from .hopfact.action import factors_through_group, inner_faithful, module_algebra_check
from .hopfact.hopf import hopf_verify
from .poisson import induced_bracket, is_central_rat, polynomial_center


@dataclass
class Step:
    name: str
    ok: bool
    detail: str
    witness: object = None


def corpus_block(name, kind):
    return parse(corpus_text(name)).find(kind)


def corpus_algebra(name, order=None):
    return build_algebra(corpus_block(f"{name}.alg", "algebra"), order)


def corpus_action(name, order=None):
    block = corpus_block(f"{name}.act", "action")
    alg = corpus_algebra(block.get("algebra").name, order)
    return build_action(block, alg, resolve_hopf(block.get("hopf")))


def corpus_poisson(name):
    return build_poisson(corpus_block(f"{name}.poi", "poisson"))


def _brackets(P):
    return ", ".join(f"{{{a},{b}}} = {p}" for (a, b), p in P.items_by_name().items())


def run_pipeline(center_degree=8, seed=1):
    steps = []
    add = lambda *a: steps.append(Step(*a))

    M = induced_bracket(corpus_algebra("moyal"))
    x, y = (Poly.var(v, M.variables) for v in ("x", "y"))
    ok = M.depth == 1 and M.gen_bracket(1, 0) == Poly.const(1, M.variables)
    add("moyal bracket", ok, f"depth {M.depth}, {{y,x}} = {M.gen_bracket(1, 0)}")

    act = corpus_action("skew3")
    A = act.algebra
    P = induced_bracket(A)
    ref = corpus_poisson("skew3")
    add("quantum space bracket", P == ref and P.depth == 1, _brackets(P))

    c = polynomial_center(P, center_degree)
    add("poisson center", c.trivial and c.certified,
        f"center trivial up to degree {center_degree}" if c.trivial else
        "center: " + ", ".join(map(str, c.basis)))

    V = A.variables
    xs, ys, zs = (Poly.var(v, V) for v in V)
    xy_z = RatFn(xs * ys, zs)
    cen = is_central_rat(P, xy_z)
    add("central element", cen.central, f"{xy_z} central = {str(cen.central).lower()}")

    D = induced_bracket(corpus_algebra("depth2"))
    dx, dy = (Poly.var(v, D.variables) for v in ("x", "y"))
    add("depth two", D.depth == 2 and D.gen_bracket(0, 1) == dx * dy,
        f"depth {D.depth}, {{x,y}} = {D.gen_bracket(0, 1)}")

    wblock = corpus_block("weyl.alg", "algebra")
    W = build_algebra(wblock)
    comm = W.commutator(W.gen("y"), W.gen("x"))
    ok = comm == W.hbar() and dehomogenize(W) == filtered_of(wblock)
    add("rees round trip", ok, f"[y,x] = {comm}, dehomogenize restores the presentation")

    H = act.hopf
    add("sweedler axioms", hopf_verify(H).ok, "all Hopf axioms hold")

    rep = module_algebra_check(act, trials=10, max_deg=6, seed=seed)
    add("module algebra", rep.ok, "N = 3, max_deg = 6", None if rep.ok else rep.witnesses)

    for mode in ("full", "mod_h"):
        v = factors_through_group(act, mode=mode, seed=seed)
        add(f"factors ({mode})", v.group is False,
            "not a group action" if v.group is False else "group action")
    iv = inner_faithful(act)
    add("inner faithful", iv.inner_faithful, f"largest annihilating Hopf ideal has dim {iv.ideal.dim}")

    gb = galois.galois_basis(act)
    add("galois rank", gb.r == 2, f"r = {gb.r} with rows from {', '.join(map(str, gb.elements))}")
    chart = galois.plucker_ratios(gb.matrix)
    target = RatFn(-2 * zs, xs * ys)
    has = any(p == target for p in chart.ratios.values())
    add("plucker ratio", has, f"I = {chart.subset_label(chart.I)}, ratios "
        + ", ".join(f"{chart.subset_label(J)}: {p}" for J, p in chart.ratios.items()))
    dk, bad = galois.defined_over_k(chart)
    add("not defined over k", not dk, "non-constant: " + ", ".join(str(p) for _, p in bad))
    cc = galois.plucker_center_check(chart, P, act)
    add("ratios central", cc.ok and cc.reliable and bool(cc.results),
        ", ".join(f"{p}: {str(c).lower()}" for _, p, c, _ in cc.results))

    for name in ("z2sign", "z3cyc", "z2moyal"):
        g = corpus_action(name)
        ch = galois.plucker_ratios(galois.galois_basis(g).matrix)
        dk, _ = galois.defined_over_k(ch)
        fv = factors_through_group(g, seed=seed)
        add(f"group action {name}", dk and fv.group is True,
            f"defined over k = {str(dk).lower()}, factors through a group = {str(fv.group).lower()}")

    pc = galois.poiscom_check(act, P, xs, [xs, ys, zs])
    add("poisson commutation", pc.ok, f"{pc.checked} cases with a0 = x", pc.failures or None)
    for a0 in (xs, ys):
        r = galois.eq3_check(act, P, a0, chart)
        add(f"ratio identity a0 = {a0}", r.ok, f"{r.checked} ratios, both routes vanish",
            r.failures or None)
    return steps
