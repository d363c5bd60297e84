"""Command-line entry point: ``deformata <command> [options]``."""
from __future__ import annotations

import argparse
import os
import random
import sys
import time
from itertools import combinations_with_replacement

from . import galois
from .defquant import dehomogenize, ore_witness, random_poly
from .errors import CommutativeError, InconclusiveError, InputError, PreconditionError
from .exactalg import Poly
from .frontend.build import (build_action, build_algebra, build_poisson, corpus_names, corpus_text,
                             filtered_of, parse_elem, parse_poly, read_source,
                             resolve_hopf)
from .frontend.parser import Ident, parse
from .frontend.report import Report
from .hopfact.action import (default_degree, factors_through_group, inner_faithful,
                             invariants, module_algebra_check)
from .hopfact.hopf import gr_radical_hopf, grouplikes, hopf_verify, radical
from .poisson import (induced_bracket, is_central_rat, jacobi_defect,
                      polynomial_center)


# -- input helpers -------------------------------------------------------------------

class Inputs:
    """Loads documents named on the command line and records them for the digest."""

    def __init__(self, args):
        self.args = args
        self.record = {"command": args.command, "seed": args.seed}
        for k in ("order", "max_deg", "elem", "a", "b", "s", "invariant", "mode", "pivot"):
            v = getattr(args, k, None)
            if v is not None:
                self.record[k] = v
        self._docs = {}

    def doc(self, path):
        if path not in self._docs:
            text = read_source(path)
            self.record[f"file:{os.path.basename(path)}"] = text
            self._docs[path] = parse(text)
        return self._docs[path]

    def action_block(self):
        if not getattr(self.args, "action", None):
            raise InputError("--action is required")
        return self.doc(self.args.action).find("action")

    def algebra(self):
        path = getattr(self.args, "alg", None)
        if path is None and getattr(self.args, "action", None):
            ref = self.action_block().get("algebra")
            if isinstance(ref, Ident):
                path = f"{ref.name}.alg"
        if path is None:
            raise InputError("--alg is required")
        return build_algebra(self.doc(path).find("algebra"), self.args.order)

    def hopf(self):
        ref = getattr(self.args, "hopf", None)
        if ref is None and getattr(self.args, "action", None):
            ref = self.action_block().get("hopf")
        if ref is None:
            raise InputError("--hopf is required")
        name = ref.name if isinstance(ref, Ident) else ref
        if os.path.exists(name) or name in corpus_names():
            return resolve_hopf(self.doc(name).find("hopf").name, self.doc(name))
        return resolve_hopf(name)

    def action(self):
        return build_action(self.action_block(), self.algebra(), self.hopf())

    def poisson(self):
        if getattr(self.args, "poisson", None):
            return build_poisson(self.doc(self.args.poisson).find("poisson"))
        return induced_bracket(self.algebra())


def _brackets(P):
    return {f"{{{a},{b}}}": str(p) for (a, b), p in P.items_by_name().items()}


# -- commands --------------------------------------------------------------------------

def cmd_bracket(rep, inp):
    alg = inp.algebra()
    rep.bounds["order"] = alg.order
    P = induced_bracket(alg)
    flipped = {f"{{{b},{a}}}": str(-p) for (a, b), p in P.items_by_name().items()}
    rep.result = {"depth": P.depth, "brackets": _brackets(P), "brackets_reversed": flipped}
    rep.say(f"depth {P.depth}")
    for (k, v), (k2, v2) in zip(_brackets(P).items(), flipped.items()):
        rep.say(f"{k} = {v}, {k2} = {v2}")


def cmd_jacobi(rep, inp):
    P = inp.poisson()
    vars = P.variables
    gens = [Poly.var(v, vars) for v in vars]
    checked = 0
    for f, g, h in combinations_with_replacement(range(len(vars)), 3):
        d = jacobi_defect(P, gens[f], gens[g], gens[h])
        checked += 1
        if d:
            rep.finding("jacobi", "nonzero Jacobi defect on generators",
                        {"triple": [vars[f], vars[g], vars[h]], "defect": str(d)})
    rng = random.Random(inp.args.seed)
    for _ in range(10):
        f, g, h = (random_poly(vars, rng, max_deg=3) for _ in range(3))
        d = jacobi_defect(P, f, g, h)
        checked += 1
        if d:
            rep.finding("jacobi", "nonzero Jacobi defect",
                        {"triple": [str(f), str(g), str(h)], "defect": str(d)})
    rep.result = {"triples": checked}
    rep.say(f"Jacobi identity checked on {checked} triples")


def cmd_center(rep, inp):
    P = inp.poisson()
    d = 8 if inp.args.max_deg is None else inp.args.max_deg
    rep.bounds["max_deg"] = d
    r = polynomial_center(P, d)
    rep.result = {"basis": [str(p) for p in r.basis], "trivial": r.trivial, "certified": r.certified}
    if r.trivial:
        rep.say(f"center trivial up to degree {d}")
    else:
        rep.say(f"center up to degree {d}: " + ", ".join(str(p) for p in r.basis))
    if not r.certified:
        rep.finding("center", "basis element failed re-verification")


def cmd_central(rep, inp):
    P = inp.poisson()
    if not inp.args.elem:
        raise InputError("--elem is required")
    f = parse_elem(inp.args.elem, P.variables)
    c = is_central_rat(P, f)
    rep.result = {"element": str(f), "central": c.central}
    rep.say(f"{f}: central = {str(c.central).lower()}")
    if not c.central:
        v, b = c.witness
        rep.finding("not central", f"{{{f}, {v}}} is nonzero", {"generator": v, "bracket": str(b)})


def cmd_star(rep, inp):
    alg = inp.algebra()
    rep.bounds["order"] = alg.order
    if inp.args.a is None or inp.args.b is None:
        raise InputError("--a and --b are required")
    a = alg.element(parse_poly(inp.args.a, alg.variables, allow_h=True))
    b = alg.element(parse_poly(inp.args.b, alg.variables, allow_h=True))
    p = alg.star(a, b)
    rep.result = {"product": str(p)}
    rep.say(f"({a}) * ({b}) = {p}")


def cmd_ore(rep, inp):
    alg = inp.algebra()
    rep.bounds["order"] = alg.order
    if inp.args.s is None or inp.args.a is None:
        raise InputError("--s and --a are required")
    s = alg.element(parse_poly(inp.args.s, alg.variables, allow_h=True))
    a = alg.element(parse_poly(inp.args.a, alg.variables, allow_h=True))
    w = ore_witness(alg, s, a)
    rep.result = {"s_left": str(w.s_left), "a_left": str(w.a_left), "certified": w.certified}
    rep.say(f"s' = {w.s_left}")
    rep.say(f"a' = {w.a_left}")
    if not w.certified:
        rep.finding("ore", "s' * a != a' * s", {"s": str(s), "a": str(a)})


def cmd_rees(rep, inp):
    block = inp.doc(inp.args.alg).find("algebra")
    kind = block.get("kind")
    if not (isinstance(kind, Ident) and kind.name == "filtered"):
        raise InputError("rees expects a filtered algebra (kind = filtered)")
    F = filtered_of(block)
    alg = build_algebra(block, inp.args.order)
    rep.bounds["order"] = alg.order
    n = len(alg.variables)
    rules = {}
    for i in range(n):
        for j in range(i + 1, n):
            rules[f"{alg.variables[j]}*{alg.variables[i]}"] = str(alg.rule(i, j))
    back = dehomogenize(alg)
    rep.result = {"rules": rules, "round_trip": back == F}
    for k, v in rules.items():
        rep.say(f"{k} -> {v}")
    rep.say(f"dehomogenize round trip: {str(back == F).lower()}")
    if back != F:
        rep.finding("rees", "dehomogenized presentation differs from the input",
                    {str(k): str(v) for k, v in back.relations.items()})


def cmd_check_hopf(rep, inp):
    H = inp.hopf()
    r = hopf_verify(H)
    rep.result = {"dim": H.dim, "axioms": r.checks}
    for k, ok in r.checks.items():
        rep.say(f"{k}: {'ok' if ok else 'FAILS'}")
        if not ok:
            rep.finding("hopf axiom", f"{k} fails", list(r.witnesses[k]))


def cmd_check_action(rep, inp):
    act = inp.action()
    d = 3 if inp.args.max_deg is None else inp.args.max_deg
    rep.bounds.update(order=act.order, max_deg=d)
    r = module_algebra_check(act, trials=inp.args.trials, max_deg=d, seed=inp.args.seed)
    rep.result = {"checks": r.checks, "trials": r.trials}
    for k, ok in r.checks.items():
        rep.say(f"{k}: {'ok' if ok else 'FAILS'}")
        if not ok:
            rep.finding(k, "module algebra axiom violated", r.witnesses[k])


def cmd_invariants(rep, inp):
    act = inp.action()
    d = 2 if inp.args.max_deg is None else inp.args.max_deg
    mode = inp.args.mode or "A"
    rep.bounds.update(order=act.order, max_deg=d)
    basis = invariants(act, d, "A0" if mode in ("A0", "mod_h") else "A")
    rep.result = {"mode": mode, "basis": [str(p) for p in basis]}
    rep.say(f"invariants of degree <= {d} ({mode}): " + ", ".join(str(p) for p in basis))


def cmd_radical(rep, inp):
    H = inp.hopf()
    R = radical(H)
    rep.result = {"radical": R.describe(H.labels), "dim": R.dim}
    rep.say(f"Rad = span{{{', '.join(R.describe(H.labels))}}}" if R.dim else "Rad = 0")
    g = grouplikes(H, seed=inp.args.seed)
    rep.result["grouplikes"] = [H.format(v) for v in g.elements]
    rep.result["grouplike_status"] = g.status
    rep.say(f"grouplikes ({g.status}): " + ", ".join(H.format(v) for v in g.elements))
    try:
        G, deg = gr_radical_hopf(H)
        rep.result["gr_basis"] = list(G.labels)
        rep.result["gr_degrees"] = list(deg)
        rep.result["gr_verified"] = hopf_verify(G).ok
        rep.say(f"gr H basis: {', '.join(G.labels)} (degrees {list(deg)})")
    except PreconditionError as exc:
        rep.result["gr_error"] = str(exc)
        rep.say(f"gr H unavailable: {exc}")
    if g.status == "inconclusive":
        rep.status = "inconclusive"


def _modes(arg, both):
    if arg in (None, "both"):
        return both
    return [{"A0": "mod_h", "A": "full"}.get(arg, arg)]


def cmd_factors(rep, inp):
    act = inp.action()
    d = default_degree(act) if inp.args.max_deg is None else inp.args.max_deg
    rep.bounds.update(order=act.order, max_deg=d)
    H = act.hopf
    out = {}
    for mode in _modes(inp.args.mode, ["full", "mod_h"]):
        v = factors_through_group(act, d, mode, seed=inp.args.seed)
        entry = {"group": v.group, "hopf_ideal": v.ideal.describe(H.labels),
                 "quotient_dim": v.quotient.dim, "table": v.table, "note": v.note}
        out[mode] = entry
        verdict = "group action" if v.group else "not a group action"
        rep.say(f"{mode}: {verdict}" + (f" (group of order {len(v.table)})" if v.table else ""))
    rep.result = out


def cmd_inner_faithful(rep, inp):
    act = inp.action()
    d = default_degree(act) if inp.args.max_deg is None else inp.args.max_deg
    rep.bounds.update(order=act.order, max_deg=d)
    H = act.hopf
    out = {}
    for mode in _modes(inp.args.mode, ["full", "mod_h"]):
        v = inner_faithful(act, d, mode)
        out[mode] = {"inner_faithful": v.inner_faithful, "ideal": v.ideal.describe(H.labels),
                     "annihilator": v.annihilator.describe(H.labels)}
        rep.say(f"{mode}: inner faithful = {str(v.inner_faithful).lower()}"
                + ("" if v.inner_faithful else f", Hopf ideal span{{{', '.join(v.ideal.describe(H.labels))}}}"))
    rep.result = out


def _chart(inp, act):
    d = inp.args.max_deg
    gb = galois.galois_basis(act, d)
    chart = galois.plucker_ratios(gb.matrix, pivot=inp.args.pivot or "dominant")
    return gb, chart


def cmd_plucker(rep, inp):
    act = inp.action()
    gb, chart = _chart(inp, act)
    rep.bounds.update(order=act.order, max_deg=gb.degree)
    ok, bad = galois.defined_over_k(chart)
    rep.result = {
        "r": gb.r, "rows": [str(e) for e in gb.elements], "matrix": gb.matrix.row_strings(),
        "I": chart.subset_label(chart.I), "pivot": chart.pivot,
        "ratios": {chart.subset_label(J): str(p) for J, p in chart.ratios.items()},
        "defined_over_k": ok,
    }
    rep.say(f"r = {gb.r}, rows from {', '.join(str(e) for e in gb.elements)}")
    rep.say(f"I = {chart.subset_label(chart.I)}")
    for J, p in chart.ratios.items():
        rep.say(f"p[{chart.subset_label(J)}] = {p}")
    rep.say(f"defined over k: {str(ok).lower()}")
    if bad:
        try:
            P = inp.poisson()
        except CommutativeError:
            P = None
        if P is not None:
            cc = galois.plucker_center_check(chart, P, act)
            rep.result["ratios_central"] = cc.ok
            rep.result["reliable"] = cc.reliable
            for label, p, central, w in cc.results:
                rep.say(f"{{f, {p}}} = 0 for all f: {str(central).lower()}")
                if not central:
                    rep.finding("plucker center", f"ratio {p} is not Poisson-central", w)
            if not cc.reliable:
                rep.finding("unreliable", "action fails the module algebra check", None)


def _invariant(inp, P):
    if not inp.args.invariant:
        raise InputError("--invariant is required")
    return parse_poly(inp.args.invariant, P.variables)


def cmd_poiscom(rep, inp):
    act = inp.action()
    P = inp.poisson()
    a0 = _invariant(inp, P)
    probes = [Poly.var(v, P.variables) for v in P.variables]
    rep.bounds.update(order=act.order)
    r = galois.poiscom_check(act, P, a0, probes)
    rep.result = {"checked": r.checked, "certification": r.certification}
    rep.say(f"rho_i({{{a0}, f}}) = {{{a0}, rho_i(f)}}: {r.checked} cases, "
            f"{'all equal' if r.ok else 'FAILURES'}")
    for f in r.failures:
        rep.finding("poiscom", "identity fails", f)


def cmd_eq3(rep, inp):
    act = inp.action()
    P = inp.poisson()
    a0 = _invariant(inp, P)
    gb, chart = _chart(inp, act)
    rep.bounds.update(order=act.order, max_deg=gb.degree)
    r = galois.eq3_check(act, P, a0, chart)
    rep.result = {"ratios": r.checked, "certification": r.certification}
    rep.say(f"{{{a0}, p_IJ}} = 0 by both routes for {r.checked} ratios: {str(r.ok).lower()}")
    for f in r.failures:
        rep.finding("eq3", "bracket with a Plücker ratio is nonzero", f)


def cmd_corpus(rep, inp):
    names = corpus_names()
    if inp.args.name:
        if inp.args.name not in names:
            raise InputError(f"unknown corpus file {inp.args.name!r}")
        rep.say(corpus_text(inp.args.name).rstrip("\n"))
        rep.result = {"name": inp.args.name}
        return
    rep.result = {"files": names}
    for n in names:
        rep.say(n)


def cmd_verify_reference(rep, inp):
    from .pipeline import run_pipeline
    d = 8 if inp.args.max_deg is None else inp.args.max_deg
    rep.bounds.update(center_max_deg=d)
    for step in run_pipeline(center_degree=d, seed=inp.args.seed):
        rep.say(f"{'PASS' if step.ok else 'FAIL'} {step.name}: {step.detail}")
        rep.result[step.name] = {"ok": step.ok, "detail": step.detail}
        if not step.ok:
            rep.finding(step.name, step.detail, step.witness)


def cmd_suites(rep, inp):
    from .suites import run_suites
    for res in run_suites(seed=inp.args.seed):
        rep.say(f"{'PASS' if res.ok else 'FAIL'} {res.name} ({res.trials} trials)")
        rep.result[res.name] = {"ok": res.ok, "trials": res.trials}
        if not res.ok:
            rep.finding(res.name, "property violated", res.witness)


COMMANDS = {
    "bracket": (cmd_bracket, "induced Poisson bracket and its depth", ["alg"]),
    "jacobi": (cmd_jacobi, "Jacobi identity on generators and random triples", ["alg", "poisson"]),
    "center": (cmd_center, "polynomial Poisson center up to a degree bound", ["alg", "poisson"]),
    "central": (cmd_central, "test a rational element for Poisson centrality", ["alg", "poisson", "elem"]),
    "star": (cmd_star, "star product of two elements", ["alg", "a", "b"]),
    "ore": (cmd_ore, "left Ore witness for (s, a)", ["alg", "s", "a"]),
    "rees": (cmd_rees, "Rees algebra of a filtered presentation and its round trip", ["alg"]),
    "check-hopf": (cmd_check_hopf, "verify the Hopf algebra axioms", ["hopf"]),
    "check-action": (cmd_check_action, "verify the module algebra axioms", ["alg", "hopf", "action", "trials"]),
    "invariants": (cmd_invariants, "invariants up to a degree bound", ["alg", "hopf", "action", "mode"]),
    "radical": (cmd_radical, "radical, grouplikes and associated graded", ["hopf"]),
    "factors": (cmd_factors, "does the action factor through a group", ["alg", "hopf", "action", "mode"]),
    "inner-faithful": (cmd_inner_faithful, "largest annihilating Hopf ideal", ["alg", "hopf", "action", "mode"]),
    "plucker": (cmd_plucker, "coaction matrix, Plücker chart and the defined-over-k test",
                ["alg", "hopf", "action", "poisson", "pivot"]),
    "poiscom": (cmd_poiscom, "coaction commutes with brackets by an invariant",
                ["alg", "hopf", "action", "poisson", "invariant"]),
    "eq3": (cmd_eq3, "brackets of an invariant with the Plücker ratios",
            ["alg", "hopf", "action", "poisson", "invariant", "pivot"]),
    "verify-paper": (cmd_verify_reference, "run the full reference pipeline on the packaged corpus", []),
    "suites": (cmd_suites, "randomized property suites", []),
    "corpus": (cmd_corpus, "list or print packaged presentation files", ["name"]),
}

OPTIONS = {
    "alg": (("--alg",), dict(help="algebra file (or packaged corpus name, '-' for stdin)")),
    "poisson": (("--poisson",), dict(help="Poisson structure file (default: induced from --alg)")),
    "hopf": (("--hopf",), dict(help="Hopf algebra: sweedler, Zn, or a file with a hopf block")),
    "action": (("--action",), dict(help="action file")),
    "elem": (("--elem",), dict(help="rational element, e.g. x*y/z")),
    "a": (("--a",), dict(help="element a")),
    "b": (("--b",), dict(help="element b")),
    "s": (("--s",), dict(help="regular element s")),
    "invariant": (("--invariant",), dict(help="invariant polynomial a0")),
    "mode": (("--mode",), dict(choices=["A", "A0", "full", "mod_h", "both"])),
    "pivot": (("--pivot",), dict(choices=["dominant", "lex"])),
    "trials": (("--trials",), dict(type=int, default=10)),
    "name": (("name",), dict(nargs="?")),
}


def _default_seed():
    env = os.environ.get("DEFORMATA_SEED")
    if env is None:
        return 1
    try:
        return int(env)
    except ValueError:
        return 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=None, help="random seed (default 1, or $DEFORMATA_SEED)")
    common.add_argument("--order", type=int, default=None, help="override the truncation order N")
    common.add_argument("--max-deg", dest="max_deg", type=int, default=None, help="degree bound")
    p = argparse.ArgumentParser(prog="deformata", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, help_, opts) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_, parents=[common])
        for o in opts:
            flags, kw = OPTIONS[o]
            sp.add_argument(*flags, **kw)
    return p


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.seed is None:
        args.seed = _default_seed()
    inp = Inputs(args)
    rep = Report(args.command, inp.record)
    t0 = time.perf_counter()
    try:
        COMMANDS[args.command][0](rep, inp)
    except (InputError, PreconditionError, CommutativeError) as exc:
        rep.status = "error"
        rep.findings.append({"kind": "input error", "message": str(exc), "witness": None})
    except InconclusiveError as exc:
        rep.status = "inconclusive"
        rep.findings.append({"kind": "inconclusive", "message": str(exc), "witness": None})
    rep.timing = time.perf_counter() - t0
    rep.inputs = inp.record
    print(rep.to_json() if args.json else rep.to_text(), file=stdout)
    return rep.exit_code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
