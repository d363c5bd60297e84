"""Randomized property suites over the corpus; every trial draws from its own seeded RNG."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from .defquant import moyal, random_hpoly, random_poly
from .hopfact.action import module_algebra_check
from .hopfact.hopf import (cyclic_group, gr_radical_hopf, group_algebra, hopf_verify, quotient_hopf,
                           radical, sweedler)
from .poisson import bracket_of_lifts, bracket_poly, induced_bracket
from .pipeline import corpus_action, corpus_algebra, corpus_poisson


@dataclass
class SuiteResult:
    name: str
    ok: bool
    trials: int
    witness: object = None


def _rng(seed, *tags):
    return random.Random(f"{seed}:" + ":".join(map(str, tags)))


def algebras_by_kind(order):
    """One representative per presentation kind at truncation ``order``."""
    return {
        "moyal": moyal([("x", "y")], order),
        "quantum": corpus_algebra("skew3", order),
        "lie": corpus_algebra("sl2", order),
        "rewriting": corpus_algebra("weyl", max(order, 1)).with_order(order),
    }


def corpus_algebras():
    return {name: corpus_algebra(name) for name in ("moyal", "skew3", "sl2", "depth2", "weyl", "qcyc")}


def associativity(seed=1, per_kind=20, max_order=4):
    n = 0
    for N in range(max_order + 1):
        for kind, A in algebras_by_kind(N).items():
            for t in range(per_kind):
                rng = _rng(seed, "assoc", kind, N, t)
                a, b, c = (random_hpoly(A, rng, max_deg=2, terms=2) for _ in range(3))
                n += 1
                lhs = A.star(A.star(a, b), c)
                rhs = A.star(a, A.star(b, c))
                if lhs != rhs:
                    return SuiteResult("associativity", False, n,
                                       {"algebra": kind, "order": N, "a": str(a), "b": str(b),
                                        "c": str(c), "(ab)c": str(lhs), "a(bc)": str(rhs)})
    return SuiteResult("associativity", True, n)


def flatness(seed=1, trials=20):
    n = 0
    for name, A in corpus_algebras().items():
        for t in range(trials):
            rng = _rng(seed, "flat", name, t)
            a, b = random_hpoly(A, rng, max_deg=3), random_hpoly(A, rng, max_deg=3)
            n += 1
            got = A.star(a, b).coeffs[0]
            want = a.coeffs[0] * b.coeffs[0]
            if got != want:
                return SuiteResult("flatness", False, n,
                                   {"algebra": name, "a": str(a), "b": str(b),
                                    "product mod h": str(got), "expected": str(want)})
    return SuiteResult("flatness", True, n)


def lift_independence(seed=1, trials=20):
    n = 0
    for name, A in corpus_algebras().items():
        if A.order < 1:
            continue
        P = induced_bracket(A)
        m = P.depth
        vars = A.variables
        for t in range(trials):
            rng = _rng(seed, "lift", name, t)
            i, j = rng.sample(range(len(vars)), 2)
            shift = lambda: A.lift(random_poly(vars, rng, max_deg=2)).shift(1)
            a = A.gen(vars[i]) + shift()
            b = A.gen(vars[j]) + shift()
            n += 1
            got = bracket_of_lifts(A, a, b, m)
            if got != P.gen_bracket(i, j):
                return SuiteResult("lift independence", False, n,
                                   {"algebra": name, "a": str(a), "b": str(b), "bracket": str(got),
                                    "expected": str(P.gen_bracket(i, j))})
    return SuiteResult("lift independence", True, n)


def leibniz(seed=1, trials=20):
    n = 0
    structures = {"skew3": corpus_poisson("skew3")}
    for name in ("moyal", "sl2", "qcyc"):
        structures[name] = induced_bracket(corpus_algebra(name))
    for name, P in structures.items():
        for t in range(trials):
            rng = _rng(seed, "leibniz", name, t)
            f, g, h = (random_poly(P.variables, rng, max_deg=3) for _ in range(3))
            n += 1
            lhs = bracket_poly(P, f * g, h)
            rhs = f * bracket_poly(P, g, h) + bracket_poly(P, f, h) * g
            if lhs != rhs:
                return SuiteResult("leibniz", False, n, {"structure": name, "f": str(f), "g": str(g),
                                                         "h": str(h)})
    return SuiteResult("leibniz", True, n)


def confluence(seed=1, words=10):
    n = 0
    for name, A in corpus_algebras().items():
        if not A.is_rewriting():
            continue
        for t in range(words):
            rng = _rng(seed, "confluence", name, t)
            word = [rng.randrange(len(A.variables)) for _ in range(rng.randint(2, 6))]
            n += 1
            one = A.reduce_word(word, _rng(seed, "left", name, t))
            two = A.reduce_word(word, _rng(seed, "right", name, t))
            if one != two:
                return SuiteResult("confluence", False, n, {"algebra": name, "word": word,
                                                            "first": str(one), "second": str(two)})
    return SuiteResult("confluence", True, n)


def _symmetric_group(k):
    perms = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms]
    return group_algebra(table, name=f"S{k}")


def hopf_axioms(seed=1):
    H = sweedler()
    algebras = {"sweedler": H, "S3": _symmetric_group(3)}
    for n in range(1, 6):
        algebras[f"Z{n}"] = cyclic_group(n)
    algebras["gr(sweedler)"] = gr_radical_hopf(H)[0]
    algebras["sweedler/Rad"] = quotient_hopf(H, radical(H))[0]
    rng = _rng(seed, "hopf")
    for k in range(3):
        n = rng.randint(2, 6)
        # Z/n with a relabelled basis
        perm = list(range(n))
        rng.shuffle(perm)
        inv = {p: i for i, p in enumerate(perm)}
        table = [[inv[(perm[i] + perm[j]) % n] for j in range(n)] for i in range(n)]
        algebras[f"Z{n} relabelled #{k}"] = group_algebra(table)
    for name, A in algebras.items():
        r = hopf_verify(A)
        if not r.ok:
            f = r.failures()[0]
            return SuiteResult("hopf axioms", False, len(algebras),
                               {"algebra": name, "axiom": f, "at": list(r.witnesses[f])})
    return SuiteResult("hopf axioms", True, len(algebras))


def module_compatibility(seed=1, trials=8):
    n = 0
    for name in ("skew3", "skew3_group", "z2sign", "z3cyc", "z2moyal"):
        act = corpus_action(name)
        r = module_algebra_check(act, trials=trials, max_deg=3,
                                 seed=_rng(seed, "module", name).randrange(1 << 30))
        n += trials
        if not r.ok:
            f = r.failures()[0]
            return SuiteResult("module algebra compatibility", False, n,
                               {"action": name, "check": f, "witness": r.witnesses[f]})
    return SuiteResult("module algebra compatibility", True, n)


SUITES = [associativity, flatness, lift_independence, leibniz, confluence, hopf_axioms,
          module_compatibility]


def run_suites(seed=1):
    return [s(seed=seed) for s in SUITES]


__all__ = ["SuiteResult", "SUITES", "run_suites", "algebras_by_kind", "corpus_algebras"]
