"""Hopf actions on deformation algebras, extended from generators through Δ."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..defquant import DeformAlgebra, HPoly, random_hpoly
from ..errors import InputError
from ..exactalg import Matrix, Poly, monomials_upto, nullspace_scalar
from .hopf import (GrouplikeResult, SubspaceOfH, cayley_table, grouplikes, largest_hopf_ideal,
                   quotient_hopf)

ZERO = Fraction(0)


@dataclass(frozen=True, eq=False)
class HopfAction:
    """Action of ``hopf`` on ``algebra``; ``gen_action[(k, var)]`` is e_k · var."""

    hopf: object
    algebra: DeformAlgebra
    gen_action: dict
    _cache: dict = field(default=None, repr=False)

    def __post_init__(self):
        H, A = self.hopf, self.algebra
        table = {}
        for (k, v), val in self.gen_action.items():
            if isinstance(k, str):
                k = H.index(k)
            if v not in A.variables:
                raise InputError(f"action on unknown generator {v!r}")
            if isinstance(val, Poly):
                val = A.element(val)
            elif not isinstance(val, HPoly):
                val = A.lift(val)
            if val.order != A.order:
                val = HPoly(list(val.coeffs[:A.order + 1])
                            + [Poly.const(0, val.vars)] * max(0, A.order - val.order))
            table[(k, v)] = HPoly(c.with_vars(A.variables) for c in val.coeffs)
        u = H.unit_index()
        if u is not None:
            for v in A.variables:
                if (u, v) in table and table[(u, v)] != A.gen(v):
                    raise InputError("the unit must act as the identity")
        object.__setattr__(self, "gen_action", table)
        object.__setattr__(self, "_cache", {})

    @property
    def order(self):
        return self.algebra.order

    # -- generator table, including derived basis elements --

    def gen_value(self, k, v):
        hit = self.gen_action.get((k, v))
        if hit is not None:
            return hit
        if k == self.hopf.unit_index():
            return self.algebra.gen(v)
        key = ("gen", k, v)
        if key in self._cache:
            return self._cache[key]
        pending = self._cache.setdefault("pending", set())
        H = self.hopf
        if key in pending:
            raise InputError(f"action of {H.labels[k]!r} on {v} is not determined")
        pending.add(key)
        try:
            for i in range(H.dim):
                for j in range(H.dim):
                    prod = H.mul[i][j]
                    if k in (i, j) or [t for t, c in enumerate(prod) if c] != [k]:
                        continue
                    try:
                        inner = self.act_basis(j, self.algebra.gen(v))
                        val = self.act_basis(i, inner).scale(1 / prod[k])
                    except InputError:
                        continue
                    self._cache[key] = val
                    return val
        finally:
            pending.discard(key)
        raise InputError(f"action of {H.labels[k]!r} on {v} is not determined")

    # -- extension --

    def act_mono(self, k, e):
        key = (k, e)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        A, H = self.algebra, self.hopf
        if not any(e):
            res = A.one().scale(H.counit[k])
        else:
            i = next(t for t, x in enumerate(e) if x)
            rest = e[:i] + (e[i] - 1,) + e[i + 1:]
            res = HPoly.zero(A.variables, A.order)
            for (p, q), c in H.comul[k].items():
                left = self.gen_value(p, A.variables[i])
                if not left:
                    continue
                right = self.act_mono(q, rest)
                if right:
                    res = res + A.star(left, right).scale(c)
        self._cache[key] = res
        return res

    def act_basis(self, k, f):
        A = self.algebra
        f = A.lift(f)
        out = {}
        for t, e, c in f.items():
            for u, e2, d in self.act_mono(k, e).items():
                if t + u <= A.order:
                    kk = (t + u, e2)
                    out[kk] = out.get(kk, ZERO) + c * d
        return HPoly.from_terms(A.variables, A.order, out)

    def act(self, h, f):
        """h · f for h a coordinate vector (or basis label) of the Hopf algebra."""
        if isinstance(h, (str, int)):
            h = self.hopf.basis(h)
        A = self.algebra
        res = HPoly.zero(A.variables, A.order)
        for k, c in enumerate(h):
            if c:
                res = res + self.act_basis(k, f).scale(c)
        return res

    def reduce_mod_h(self):
        """The induced action of H on A₀ = A/ℏA."""
        A0 = self.algebra.with_order(0)
        table = {}
        for (k, v), val in self.gen_action.items():
            table[(k, v)] = val.truncate(0)
        return HopfAction(self.hopf, A0, table)

    def with_gen(self, k, v, value):
        """Copy with one generator image replaced (used for mutation tests)."""
        table = dict(self.gen_action)
        table[(self.hopf.index(k) if isinstance(k, str) else k, v)] = value
        return HopfAction(self.hopf, self.algebra, table)

    def __repr__(self):
        return f"HopfAction({self.hopf!r} on {self.algebra!r})"


def act(action, h, f):
    return action.act(h, f)


def trivial_action(H, alg):
    """h · f = ε(h) f."""
    table = {(k, v): alg.gen(v).scale(H.counit[k]) for k in range(H.dim) for v in alg.variables}
    return HopfAction(H, alg, table)


# -- module algebra check ------------------------------------------------------

@dataclass
class ActionReport:
    checks: dict
    witnesses: dict
    trials: int
    max_deg: int

    @property
    def ok(self):
        return all(self.checks.values())

    def failures(self):
        return [k for k, v in self.checks.items() if not v]


def _delta_product(action, k, u, v):
    A, H = action.algebra, action.hopf
    res = HPoly.zero(A.variables, A.order)
    for (p, q), c in H.comul[k].items():
        res = res + A.star(action.act_basis(p, u), action.act_basis(q, v)).scale(c)
    return res


def module_algebra_check(action, trials=10, max_deg=3, seed=1):
    A, H = action.algebra, action.hopf
    checks = {"relations": True, "coproduct compatibility": True,
              "multiplication compatibility": True, "unit": True}
    wit = {}

    def fail(name, w):
        if checks[name]:
            checks[name] = False
            wit[name] = w

    try:
        for k in range(H.dim):
            for v in A.variables:
                action.gen_value(k, v)
    except InputError as exc:
        fail("relations", {"error": str(exc)})
        return ActionReport(checks, wit, trials, max_deg)

    n = len(A.variables)
    for k in range(H.dim):
        for i in range(n):
            for j in range(i + 1, n):
                xi, xj = A.gen(A.variables[i]), A.gen(A.variables[j])
                for u, w in ((xj, xi), (xi, xj)):
                    lhs = action.act_basis(k, A.star(u, w))
                    rhs = _delta_product(action, k, u, w)
                    if lhs != rhs:
                        fail("relations", {"h": H.labels[k], "relation": f"{u}*{w}",
                                           "via normal form": str(lhs), "via coproduct": str(rhs)})
        one = action.act_basis(k, A.one())
        if one != A.one().scale(H.counit[k]):
            fail("unit", {"h": H.labels[k], "h.1": str(one)})
    rng = random.Random(seed)
    for _ in range(trials):
        u = random_hpoly(A, rng, max_deg=max_deg)
        w = random_hpoly(A, rng, max_deg=max_deg)
        k = rng.randrange(H.dim)
        lhs = action.act_basis(k, A.star(u, w))
        rhs = _delta_product(action, k, u, w)
        if lhs != rhs:
            fail("coproduct compatibility", {"h": H.labels[k], "u": str(u), "v": str(w),
                                             "lhs": str(lhs), "rhs": str(rhs)})
        i, j = rng.randrange(H.dim), rng.randrange(H.dim)
        lhs = action.act(H.mul[i][j], u)
        rhs = action.act_basis(i, action.act_basis(j, u))
        if lhs != rhs:
            fail("multiplication compatibility", {"h": H.labels[i], "k": H.labels[j], "u": str(u),
                                                  "lhs": str(lhs), "rhs": str(rhs)})
        lhs = action.act(H.unit, u)
        if lhs != u:
            fail("unit", {"u": str(u), "1.u": str(lhs)})
    return ActionReport(checks, wit, trials, max_deg)


# -- linear solves over bounded degree ---------------------------------------

def default_degree(action):
    """Twice the largest degree among defining relations (quadratic presentations give 4)."""
    return 4


def _monomials(action, d):
    return monomials_upto(len(action.algebra.variables), d)


def invariants(action, d, mode="A"):
    """Basis of invariants of degree ≤ d: mode "A0" works mod ℏ, "A" at full order (canonical lifts)."""
    if d < 0:
        raise InputError("degree bound must be non-negative")
    act_ = action.reduce_mod_h() if mode == "A0" else action
    if mode not in ("A", "A0"):
        raise InputError("mode must be 'A' or 'A0'")
    A, H = act_.algebra, act_.hopf
    monos = _monomials(act_, d)
    rows = {}
    for col, e in enumerate(monos):
        for k in range(H.dim):
            img = act_.act_mono(k, e)
            for t, e2, c in img.items():
                rows.setdefault((k, t, e2), {})[col] = rows.setdefault((k, t, e2), {}).get(col, ZERO) + c
            if H.counit[k]:
                key = (k, 0, e)
                rows.setdefault(key, {})[col] = rows[key].get(col, ZERO) - H.counit[k]
    mat = Matrix([[r.get(c, ZERO) for c in range(len(monos))] for _, r in sorted(rows.items())],
                 len(monos))
    out = []
    for v in nullspace_scalar(mat):
        out.append(Poly(A.variables, {monos[c]: x for c, x in enumerate(v) if x}).monic())
    out.sort(key=lambda p: (p.degree(), [(-sum(e), tuple(-x for x in e)) for e, _ in p.sorted_terms()]))
    return out


def annihilator(action, d, mode="full"):
    """{x ∈ H : x·m = 0 (mode "full") or x·m ∈ ℏA (mode "mod_h") for all monomials m of degree ≤ d}."""
    if mode not in ("full", "mod_h"):
        raise InputError("mode must be 'full' or 'mod_h'")
    act_ = action.reduce_mod_h() if mode == "mod_h" else action
    H = act_.hopf
    rows = {}
    for e in _monomials(act_, d):
        for k in range(H.dim):
            for t, e2, c in act_.act_mono(k, e).items():
                rows.setdefault((e, t, e2), {})[k] = c
    mat = Matrix([[r.get(k, ZERO) for k in range(H.dim)] for _, r in sorted(rows.items())], H.dim)
    return SubspaceOfH.span(H.dim, nullspace_scalar(mat))


def annihilator_mod_h(action, d):
    return annihilator(action, d, "mod_h")


# -- verdicts ------------------------------------------------------------------------

@dataclass
class FactorVerdict:
    group: bool | None  # None when inconclusive
    ideal: SubspaceOfH
    quotient: object
    grouplikes: GrouplikeResult
    table: list | None
    degree: int
    mode: str
    note: str = ""


def factors_through_group(action, d=None, mode="full", seed=1):
    """Does the action factor through a group algebra?

    The action factors through H/J for J the largest Hopf ideal inside the
    annihilator; H/J is a group algebra over an algebraically closed field
    exactly when its dual is commutative and semisimple.
    """
    d = default_degree(action) if d is None else d
    H = action.hopf
    ann = annihilator(action, d, mode)
    J = largest_hopf_ideal(H, ann)
    Q, _ = quotient_hopf(H, J)
    gl = grouplikes(Q, seed=seed)
    group = gl.semisimple_commutative_dual
    table = None
    note = ""
    if group:
        if gl.status == "complete" and len(gl.elements) == Q.dim:
            table = cayley_table(Q, gl.elements)
        else:
            note = "group algebra over the algebraic closure; not all grouplikes are rational"
    return FactorVerdict(group, J, Q, gl, table, d, mode, note)


@dataclass
class InnerFaithfulVerdict:
    inner_faithful: bool
    ideal: SubspaceOfH
    annihilator: SubspaceOfH
    degree: int
    mode: str

    def __bool__(self):
        return self.inner_faithful


def inner_faithful(action, d=None, mode="full"):
    d = default_degree(action) if d is None else d
    ann = annihilator(action, d, mode)
    J = largest_hopf_ideal(action.hopf, ann)
    return InnerFaithfulVerdict(J.dim == 0, J, ann, d, mode)
