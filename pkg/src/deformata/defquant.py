"""Truncated quantum deformations of polynomial algebras.

An N-th order deformation is modelled as k[x_1..x_n] ⊗ k[ℏ]/(ℏ^{N+1}) with a
deformed product ⋆. Elements are :class:`HPoly` values: N+1 polynomial
coefficients, one per power of ℏ. Four presentations are supported:

* :class:`Moyal` -- ``f⋆g = Σ_α ℏ^|α|/α! ∂_p^α f ∂_q^α g`` over (position q,
  momentum p) pairs.
* :class:`QuantumPoly` -- ``x_i x_j = q_ij x_j x_i`` with q_ij ≡ 1 mod ℏ.
* :class:`LieEnveloping` -- ``x_j x_i = x_i x_j + ℏ[x_j, x_i]`` (Rees algebra of U(g)).
* :class:`GenericRewriting` -- arbitrary flat rules ``x_j⋆x_i -> ...`` for j > i.

The last three are rewriting presentations: elements are stored in the PBW
normal form with variables in ascending declared order.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Mapping

from .errors import InputError, PreconditionError
from .exactalg import Poly


# -- truncated scalar series --------------------------------------------------

@dataclass(frozen=True)
class HSeries:
    """A scalar in k[ℏ]/(ℏ^{N+1})."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise InputError("series needs at least one coefficient")

    @property
    def order(self):
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order):
        return cls((1,) + (0,) * order)

    @classmethod
    def exp(cls, rate, order):
        """exp(rate·ℏ) truncated at ℏ^order."""
        rate = Fraction(rate)
        return cls(tuple(rate ** k / factorial(k) for k in range(order + 1)))

    @classmethod
    def from_poly(cls, p, order):
        """Read a polynomial in the single variable ``h`` as a series."""
        c = [Fraction(0)] * (order + 1)
        for e, v in p.terms.items():
            if any(k and name != "h" for name, k in zip(p.vars, e)):
                raise InputError("series may only involve h")
            if sum(e) <= order:
                c[sum(e)] += v
        return cls(tuple(c))

    def truncate(self, order):
        c = self.coeffs[:order + 1]
        return HSeries(c + (Fraction(0),) * (order + 1 - len(c)))

    def __add__(self, other):
        return HSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return HSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return HSeries(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, HSeries):
            return HSeries(tuple(a * other for a in self.coeffs))
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[:n + 1]):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return HSeries(tuple(out))

    def inverse(self):
        a = self.coeffs
        if not a[0]:
            raise PreconditionError("series with zero constant term is not invertible")
        inv = [1 / a[0]]
        for k in range(1, len(a)):
            inv.append(-sum(a[i] * inv[k - i] for i in range(1, k + 1)) / a[0])
        return HSeries(tuple(inv))

    def valuation(self):
        return next((i for i, c in enumerate(self.coeffs) if c), None)

    def is_one(self):
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def __str__(self):
        from .frontend.printer import format_series
        return format_series(self)


# -- truncated ℏ-polynomials ---------------------------------------------------

class HPoly:
    """Element of A_N: coefficient ``coeffs[i]`` multiplies ℏ^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise InputError("HPoly needs at least one coefficient")
        vars = coeffs[0].vars
        self.coeffs = tuple(c if c.vars == vars else c.with_vars(vars) for c in coeffs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    @property
    def vars(self):
        return self.coeffs[0].vars

    @classmethod
    def zero(cls, vars, order):
        z = Poly.const(0, vars)
        return cls((z,) * (order + 1))

    @classmethod
    def lift(cls, p, order, vars=None):
        """Canonical lift of an A₀ element (placed at ℏ⁰)."""
        if not isinstance(p, Poly):
            p = Poly.const(p, vars or ())
        if vars is not None:
            p = p.with_vars(vars)
        z = Poly.const(0, p.vars)
        return cls((p,) + (z,) * order)

    @classmethod
    def from_terms(cls, vars, order, terms):
        """Build from ``{(hpow, exponent): coeff}``; powers above ``order`` are dropped."""
        buckets = [dict() for _ in range(order + 1)]
        for (t, e), c in terms.items():
            if t <= order and c:
                buckets[t][e] = buckets[t].get(e, 0) + c
        return cls(Poly(vars, b) for b in buckets)

    @classmethod
    def from_hpoly_expr(cls, p, vars, order):
        """Interpret a Poly over ``vars + ('h',)`` (h = ℏ) as an HPoly."""
        if "h" not in p.vars:
            return cls.lift(p.with_vars(vars), order)
        hi = p.vars.index("h")
        names = tuple(v for v in p.vars if v != "h")
        buckets = [dict() for _ in range(order + 1)]
        for e, c in p.terms.items():
            if e[hi] <= order:
                buckets[e[hi]][e[:hi] + e[hi + 1:]] = c
        return cls(Poly(names, b).with_vars(vars) for b in buckets)

    def items(self):
        for t, c in enumerate(self.coeffs):
            for e, v in c.terms.items():
                yield t, e, v

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def valuation(self):
        return next((i for i, c in enumerate(self.coeffs) if c), None)

    def mod_h(self):
        return self.coeffs[0]

    def truncate(self, order):
        c = self.coeffs[:order + 1]
        z = Poly.const(0, self.vars)
        return HPoly(c + (z,) * (order + 1 - len(c)))

    def shift(self, k):
        """Multiply by ℏ^k (truncating)."""
        if k == 0:
            return self
        z = Poly.const(0, self.vars)
        n = self.order
        return HPoly(((z,) * k + self.coeffs)[:n + 1] if k <= n else (z,) * (n + 1))

    def _check(self, other):
        if not isinstance(other, HPoly):
            raise TypeError("expected an HPoly")
        if other.order != self.order:
            raise InputError("mismatched truncation orders")

    def __add__(self, other):
        if not isinstance(other, HPoly):
            return self + HPoly.lift(Poly.const(other, self.vars), self.order)
        self._check(other)
        return HPoly(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, HPoly):
            return self - HPoly.lift(Poly.const(other, self.vars), self.order)
        self._check(other)
        return HPoly(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return HPoly(-c for c in self.coeffs)

    def scale(self, c):
        """Multiply by a scalar or an :class:`HSeries`."""
        if isinstance(c, HSeries):
            out = []
            for k in range(self.order + 1):
                acc = Poly.const(0, self.vars)
                for i in range(min(k, c.order) + 1):
                    if c.coeffs[i] and self.coeffs[k - i]:
                        acc = acc + self.coeffs[k - i].scale(c.coeffs[i])
                out.append(acc)
            return HPoly(out)
        return HPoly(p.scale(c) for p in self.coeffs)

    def __mul__(self, c):
        if isinstance(c, (HPoly, Poly)):
            raise TypeError("use star(alg, a, b) for the deformed product")
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, HPoly):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"HPoly({str(self)!r}, N={self.order})"

    def __str__(self):
        from .frontend.printer import format_hpoly
        return format_hpoly(self)


# -- presentations ------------------------------------------------------------

@dataclass(frozen=True)
class Moyal:
    pairs: tuple  # ((position, momentum), ...)


@dataclass(frozen=True)
class QuantumPoly:
    q: Mapping  # (i, j) with i < j -> HSeries: x_i x_j = q_ij x_j x_i


@dataclass(frozen=True)
class LieEnveloping:
    brackets: Mapping  # (i, j) with i < j -> {k: Fraction}: [x_i, x_j] = Σ c^k x_k


@dataclass(frozen=True)
class GenericRewriting:
    rules: Mapping  # (i, j) with i < j -> HPoly, the normal form of x_j ⋆ x_i
    degrees: tuple | None = None  # grading making the rules homogeneous with deg ℏ = 1


def _unit(n, i):
    return tuple(int(k == i) for k in range(n))


def _add(e1, e2):
    return tuple(a + b for a, b in zip(e1, e2))


@dataclass(frozen=True, eq=False)
class DeformAlgebra:
    """An N-th order quantum deformation of k[variables]."""

    variables: tuple
    order: int
    presentation: object
    _rules: dict = field(default=None, repr=False)
    _cache: dict = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if "h" in self.variables:
            raise InputError("'h' is reserved for ℏ and cannot be a variable")
        if len(set(self.variables)) != len(self.variables):
            raise InputError("duplicate variable names")
        if self.order < 0:
            raise InputError("truncation order must be non-negative")
        object.__setattr__(self, "_cache", {})
        pres = self.presentation
        if isinstance(pres, Moyal):
            seen = set()
            for pos, mom in pres.pairs:
                if pos not in self.variables or mom not in self.variables:
                    raise InputError(f"Moyal pair ({pos}, {mom}) uses unknown variables")
                if pos in seen or mom in seen or pos == mom:
                    raise InputError("Moyal pairs must be disjoint")
                if self.variables.index(pos) > self.variables.index(mom):
                    raise InputError(f"position variable {pos} must precede momentum {mom}")
                seen |= {pos, mom}
            object.__setattr__(self, "_rules", None)
        else:
            object.__setattr__(self, "_rules", self._build_rules())

    # -- rewriting rules --

    def _build_rules(self):
        n = len(self.variables)
        N = self.order
        pres = self.presentation
        rules = {}
        for i in range(n):
            for j in range(i + 1, n):
                lead = _add(_unit(n, i), _unit(n, j))
                if isinstance(pres, QuantumPoly):
                    q = pres.q.get((i, j))
                    if q is None:
                        rule = {(0, lead): Fraction(1)}
                    else:
                        q = q.truncate(N)
                        if q.coeffs[0] != 1:
                            raise InputError("q_ij must be ≡ 1 mod ℏ")
                        qinv = q.inverse()
                        rule = {(t, lead): c for t, c in enumerate(qinv.coeffs) if c}
                elif isinstance(pres, LieEnveloping):
                    rule = {(0, lead): Fraction(1)}
                    if N >= 1:
                        for k, c in pres.brackets.get((i, j), {}).items():
                            if c:
                                rule[(1, _unit(n, k))] = rule.get((1, _unit(n, k)), 0) - c
                elif isinstance(pres, GenericRewriting):
                    hp = pres.rules.get((i, j))
                    if hp is None:
                        rule = {(0, lead): Fraction(1)}
                    else:
                        hp = hp.truncate(N) if hp.order != N else hp
                        rule = {(t, e): c for t, e, c in hp.items()}
                else:
                    raise InputError(f"unknown presentation {pres!r}")
                flat = {e: c for (t, e), c in rule.items() if t == 0}
                if flat != {lead: 1}:
                    raise InputError(
                        f"rule for {self.variables[j]}⋆{self.variables[i]} is not "
                        f"{self.variables[i]}*{self.variables[j]} mod ℏ (deformation not flat)")
                rules[(i, j)] = rule
        return rules

    @property
    def kind(self):
        return {Moyal: "moyal", QuantumPoly: "quantum", LieEnveloping: "lie",
                GenericRewriting: "rewriting"}[type(self.presentation)]

    def is_rewriting(self):
        return self._rules is not None

    def rule(self, i, j):
        """Normal form of x_j ⋆ x_i (i < j) as an HPoly."""
        return HPoly.from_terms(self.variables, self.order, self._rules[(i, j)])

    def with_order(self, order):
        pres = self.presentation
        if isinstance(pres, GenericRewriting):
            pres = GenericRewriting({k: v.truncate(order) for k, v in pres.rules.items()},
                                    pres.degrees)
        return DeformAlgebra(self.variables, order, pres)

    # -- elements --

    def gen(self, name):
        return HPoly.lift(Poly.var(name, self.variables), self.order)

    def gens(self):
        return [self.gen(v) for v in self.variables]

    def lift(self, p):
        if isinstance(p, HPoly):
            return p
        if not isinstance(p, Poly):
            p = Poly.const(p, self.variables)
        return HPoly.lift(p.with_vars(self.variables), self.order)

    def one(self):
        return self.lift(1)

    def hbar(self):
        return self.one().shift(1)

    def element(self, p):
        """Interpret a Poly over variables plus ``h`` as an element."""
        if isinstance(p, HPoly):
            return p
        return HPoly.from_hpoly_expr(p, self.variables, self.order)

    def contains(self, a):
        return isinstance(a, HPoly) and a.order == self.order and set(a.vars) <= set(self.variables)

    # -- products --

    def star(self, a, b):
        for x in (a, b):
            if not isinstance(x, HPoly):
                raise InputError("star expects HPoly operands")
            if x.order != self.order:
                raise InputError("operand truncation order does not match the algebra")
        a = a if a.vars == self.variables else HPoly(c.with_vars(self.variables) for c in a.coeffs)
        b = b if b.vars == self.variables else HPoly(c.with_vars(self.variables) for c in b.coeffs)
        if self._rules is None:
            return self._moyal(a, b)
        return self._rewrite_product(a, b)

    def _moyal(self, a, b):
        N = self.order
        vars = self.variables
        out = [Poly.const(0, vars) for _ in range(N + 1)]
        for s, f in enumerate(a.coeffs):
            if not f:
                continue
            for t, g in enumerate(b.coeffs):
                budget = N - s - t
                if budget < 0:
                    break
                if not g:
                    continue
                for k, p in enumerate(moyal_poly(f, g, self.presentation.pairs, budget)):
                    if p:
                        out[s + t + k] = out[s + t + k] + p
        return HPoly(out)

    def _rewrite_product(self, a, b):
        N = self.order
        terms = {}
        bt = list(b.items())
        for s, e1, c1 in a.items():
            for t, e2, c2 in bt:
                budget = N - s - t
                if budget < 0:
                    continue
                for (u, e), c in self._mul_mono(e1, e2, budget).items():
                    key = (s + t + u, e)
                    v = terms.get(key, 0) + c1 * c2 * c
                    if v:
                        terms[key] = v
                    else:
                        terms.pop(key, None)
        return HPoly.from_terms(self.variables, N, terms)

    def _mul_mono(self, m1, m2, budget):
        """Normal form of m1 ⋆ m2 for normal monomials, as {(hpow, exps): coeff}, hpow <= budget."""
        key = (m1, m2, budget)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        hi = max((i for i, k in enumerate(m1) if k), default=-1)
        lo = min((i for i, k in enumerate(m2) if k), default=len(m2))
        if hi <= lo:
            res = {(0, _add(m1, m2)): Fraction(1)}
        else:
            rest = m2[:lo] + (m2[lo] - 1,) + m2[lo + 1:]
            res = {}
            for (t, n), c in self._mul_gen(m1, lo, budget).items():
                for (u, e), d in self._mul_mono(n, rest, budget - t).items():
                    key2 = (t + u, e)
                    v = res.get(key2, 0) + c * d
                    if v:
                        res[key2] = v
                    else:
                        res.pop(key2, None)
        self._cache[key] = res
        return res

    def _mul_gen(self, m1, k, budget):
        """Normal form of m1 ⋆ x_k."""
        hi = max((i for i, e in enumerate(m1) if e), default=-1)
        if hi <= k:
            return {(0, m1[:k] + (m1[k] + 1,) + m1[k + 1:]): Fraction(1)}
        key = ("g", m1, k, budget)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        rest = m1[:hi] + (m1[hi] - 1,) + m1[hi + 1:]
        res = {}
        for (t, e), c in self._rules[(k, hi)].items():
            if t > budget:
                continue
            for (u, f), d in self._mul_mono(rest, e, budget - t).items():
                key2 = (t + u, f)
                v = res.get(key2, 0) + c * d
                if v:
                    res[key2] = v
                else:
                    res.pop(key2, None)
        self._cache[key] = res
        return res

    def power(self, a, k):
        result = self.one()
        for _ in range(k):
            result = self.star(result, a)
        return result

    def commutator(self, a, b):
        return self.star(a, b) - self.star(b, a)

    def ad(self, s, a, times=1):
        for _ in range(times):
            a = self.commutator(s, a)
        return a

    def relations(self):
        """Generator relations ``(i, j, x_j ⋆ x_i)`` for i < j, normal forms included."""
        out = []
        n = len(self.variables)
        for i in range(n):
            for j in range(i + 1, n):
                gi, gj = self.gen(self.variables[i]), self.gen(self.variables[j])
                out.append((i, j, self.star(gj, gi)))
        return out

    def reduce_word(self, word, rng=None):
        """Normal form of a word of generator indices, reducing inversions in random order."""
        return reduce_word(self, word, rng)

    def __repr__(self):
        return f"DeformAlgebra({self.kind}, vars={self.variables}, N={self.order})"


def moyal_poly(f, g, pairs, budget):
    """ℏ-coefficients 0..budget of f ⋆ g under the normal-ordered Moyal formula."""
    vars = f.vars
    out = [Poly.const(0, vars) for _ in range(budget + 1)]
    stack = [(0, f, g, Fraction(1))]
    for pos, mom in pairs:
        nxt = []
        for k, F, G, c in stack:
            Fi, Gi = F, G
            for i in range(budget - k + 1):
                if i:
                    Fi, Gi = Fi.diff(mom), Gi.diff(pos)
                if not Fi or not Gi:
                    break
                nxt.append((k + i, Fi, Gi, c / factorial(i)))
        stack = nxt
    for k, F, G, c in stack:
        out[k] = out[k] + (F * G).scale(c)
    return out


def reduce_word(alg, word, rng=None):
    """Rewrite a word (tuple of generator indices) to normal form.

    Inversions ``x_j x_i`` (j > i) are replaced by the rule; which inversion to
    reduce next is chosen by ``rng`` (leftmost when ``rng`` is None).
    """
    if not alg.is_rewriting():
        raise InputError("word reduction needs a rewriting presentation")
    n = len(alg.variables)
    N = alg.order
    rule_words = {}
    for (i, j), rule in alg._rules.items():
        rule_words[(i, j)] = [(t, tuple(k for k in range(n) for _ in range(e[k])), c)
                              for (t, e), c in rule.items()]
    todo = {(0, tuple(word)): Fraction(1)}
    done = {}
    while todo:
        (t, w), c = todo.popitem()
        inv = [p for p in range(len(w) - 1) if w[p] > w[p + 1]]
        if not inv:
            e = tuple(w.count(k) for k in range(n))
            key = (t, e)
            v = done.get(key, 0) + c
            if v:
                done[key] = v
            else:
                done.pop(key, None)
            continue
        p = inv[0] if rng is None else rng.choice(inv)
        for u, rw, d in rule_words[(w[p + 1], w[p])]:
            if t + u > N:
                continue
            key = (t + u, w[:p] + rw + w[p + 2:])
            v = todo.get(key, 0) + c * d
            if v:
                todo[key] = v
            else:
                todo.pop(key, None)
    return HPoly.from_terms(alg.variables, N, done)


# -- constructors ---------------------------------------------------------------

def moyal(pairs, order, variables=None):
    pairs = tuple((str(a), str(b)) for a, b in pairs)
    if variables is None:
        variables = tuple(v for pair in pairs for v in pair)
    return DeformAlgebra(tuple(variables), order, Moyal(pairs))


def quantum_poly(variables, q, order):
    """``q`` maps a pair (a, b) of names to an HSeries (or a rate λ for exp(λℏ)): a⋆b = q·b⋆a."""
    variables = tuple(variables)
    idx = {v: i for i, v in enumerate(variables)}
    table = {}
    for (a, b), val in q.items():
        if not isinstance(val, HSeries):
            val = HSeries.exp(val, order)
        val = val.truncate(order)
        i, j = idx[a], idx[b]
        if i == j:
            raise InputError("q relation needs two distinct variables")
        if i > j:
            i, j, val = j, i, val.inverse()
        if (i, j) in table and table[(i, j)] != val:
            raise InputError(f"conflicting q for ({a}, {b})")
        table[(i, j)] = val
    return DeformAlgebra(variables, order, QuantumPoly(table))


def lie_enveloping(variables, brackets, order):
    """``brackets`` maps (a, b) to a linear Poly (or {name: coeff}) giving [a, b]."""
    variables = tuple(variables)
    n = len(variables)
    idx = {v: i for i, v in enumerate(variables)}
    table = {}
    for (a, b), val in brackets.items():
        if isinstance(val, Poly):
            p = val.with_vars(variables)
            if p.degree() > 1 or p.constant_value():
                raise InputError(f"[{a},{b}] must be a linear combination of generators")
            coeffs = {e.index(1): c for e, c in p.terms.items()}
        else:
            coeffs = {idx[k]: Fraction(c) for k, c in val.items()}
        i, j = idx[a], idx[b]
        if i == j:
            if any(coeffs.values()):
                raise InputError("[x, x] must vanish (antisymmetry)")
            continue
        if i > j:
            i, j = j, i
            coeffs = {k: -c for k, c in coeffs.items()}
        if (i, j) in table and table[(i, j)] != coeffs:
            raise InputError(f"bracket [{a},{b}] is not antisymmetric")
        table[(i, j)] = {k: c for k, c in coeffs.items() if c}

    def br(i, j):
        if i == j:
            return {}
        if i < j:
            return table.get((i, j), {})
        return {k: -c for k, c in table.get((j, i), {}).items()}

    for i in range(n):
        for j in range(n):
            for k in range(n):
                total = {}
                for (x, y, z) in ((i, j, k), (j, k, i), (k, i, j)):
                    for m, c in br(y, z).items():
                        for l, d in br(x, m).items():
                            total[l] = total.get(l, 0) + c * d
                if any(total.values()):
                    raise InputError(
                        f"structure constants fail Jacobi on "
                        f"({variables[i]}, {variables[j]}, {variables[k]})")
    return DeformAlgebra(variables, order, LieEnveloping(table))


def rewriting(variables, rules, order, degrees=None):
    """``rules`` maps (b, a) with a before b to the HPoly normal form of b⋆a."""
    variables = tuple(variables)
    idx = {v: i for i, v in enumerate(variables)}
    table = {}
    for (b, a), hp in rules.items():
        i, j = idx[a], idx[b]
        if i >= j:
            raise InputError(f"rule ({b},{a}) must rewrite a later variable past an earlier one")
        table[(i, j)] = hp
    if degrees is not None and not isinstance(degrees, tuple):
        degrees = tuple(degrees[v] for v in variables)
    return DeformAlgebra(variables, order, GenericRewriting(table, degrees))


def commutative(variables, order):
    return DeformAlgebra(tuple(variables), order, GenericRewriting({}))


# -- functional forms ------------------------------------------------------------

def star(alg, a, b):
    return alg.star(a, b)


def commutator(alg, a, b):
    return alg.commutator(a, b)


@dataclass(frozen=True)
class OreWitness:
    s_left: HPoly
    a_left: HPoly
    certified: bool


def ore_witness(alg, s, a):
    """Left Ore witness ``s^{N+1} ⋆ a = (Σ_j s^{N-j} ⋆ ad(s)^j a) ⋆ s`` for regular s."""
    if not s.coeffs[0]:
        raise PreconditionError("not a regular element: s lies in ℏA")
    N = alg.order
    powers = [alg.one()]
    for _ in range(N + 1):
        powers.append(alg.star(powers[-1], s))
    a_left = HPoly.zero(alg.variables, N)
    ad = a
    for j in range(N + 1):
        a_left = a_left + alg.star(powers[N - j], ad)
        ad = alg.commutator(s, ad)
    s_left = powers[N + 1]
    certified = alg.star(s_left, a) == alg.star(a_left, s)
    return OreWitness(s_left, a_left, certified)


# -- filtered presentations and the Rees construction -------------------------

@dataclass(frozen=True, eq=False)
class FilteredPresentation:
    """Filtered algebra given by x_j x_i = rhs (normal ordered) for a before b."""

    variables: tuple
    degrees: tuple
    relations: Mapping  # (b, a) -> Poly

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        degrees = self.degrees
        if isinstance(degrees, Mapping):
            degrees = tuple(degrees[v] for v in self.variables)
        object.__setattr__(self, "degrees", tuple(int(d) for d in degrees))
        idx = {v: i for i, v in enumerate(self.variables)}
        rels = {}
        for (b, a), rhs in self.relations.items():
            i, j = idx[a], idx[b]
            if i >= j:
                raise InputError(f"relation ({b},{a}) must reorder a later variable")
            rhs = rhs.with_vars(self.variables)
            lead = Poly.var(a, self.variables) * Poly.var(b, self.variables)
            top = self.degrees[i] + self.degrees[j]
            lower = rhs - lead
            if lower and lower.weighted_degree(self.degrees) >= top:
                raise InputError(
                    f"relation {b}*{a}: correction must have filtration degree < {top}")
            if lower:
                rels[(b, a)] = rhs
        object.__setattr__(self, "relations", rels)

    def __eq__(self, other):
        return (isinstance(other, FilteredPresentation) and self.variables == other.variables
                and self.degrees == other.degrees and self.relations == other.relations)


def rees_of_filtered(f, order):
    """Homogenized deformation: each correction term m gets ℏ^(deg x_a + deg x_b - deg m)."""
    vars = f.variables
    idx = {v: i for i, v in enumerate(vars)}
    rules = {}
    for (b, a), rhs in f.relations.items():
        top = f.degrees[idx[a]] + f.degrees[idx[b]]
        terms = {}
        for e, c in rhs.terms.items():
            t = top - sum(w * k for w, k in zip(f.degrees, e))
            if t > order:
                raise InputError(f"order {order} too small for the filtration drop {t} in {b}*{a}")
            terms[(t, e)] = c
        rules[(b, a)] = HPoly.from_terms(vars, order, terms)
    return rewriting(vars, rules, order, degrees=f.degrees)


def dehomogenize(alg):
    """Recover the filtered presentation by setting ℏ = 1."""
    pres = alg.presentation
    if not isinstance(pres, GenericRewriting) or pres.degrees is None:
        raise InputError("dehomogenize needs a graded rewriting algebra (from rees_of_filtered)")
    deg = pres.degrees
    vars = alg.variables
    rels = {}
    for (i, j), rule in alg._rules.items():
        top = deg[i] + deg[j]
        rhs = {}
        for (t, e), c in rule.items():
            if t + sum(w * k for w, k in zip(deg, e)) != top:
                raise InputError(f"rule {vars[j]}*{vars[i]} is not homogeneous with deg ℏ = 1")
            rhs[e] = rhs.get(e, 0) + c
        rels[(vars[j], vars[i])] = Poly(vars, rhs)
    return FilteredPresentation(vars, deg, rels)


# -- random elements (shared by property suites) --------------------------------

def random_hpoly(alg, rng: random.Random, max_deg=2, terms=3, hbar=True, coeff=3):
    n = len(alg.variables)
    out = {}
    for _ in range(terms):
        d = rng.randint(0, max_deg)
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        t = rng.randint(0, alg.order) if hbar and rng.random() < 0.3 else 0
        c = rng.choice([k for k in range(-coeff, coeff + 1) if k])
        out[(t, tuple(e))] = out.get((t, tuple(e)), 0) + c
    return HPoly.from_terms(alg.variables, alg.order, out)


def random_poly(vars, rng: random.Random, max_deg=2, terms=3, coeff=3):
    n = len(vars)
    out = {}
    for _ in range(terms):
        d = rng.randint(0, max_deg)
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        out[tuple(e)] = out.get(tuple(e), 0) + rng.choice([k for k in range(-coeff, coeff + 1) if k])
    return Poly(tuple(vars), out)


__all__ = [
    "HSeries", "HPoly", "Moyal", "QuantumPoly", "LieEnveloping", "GenericRewriting",
    "DeformAlgebra", "FilteredPresentation", "OreWitness", "moyal", "quantum_poly",
    "lie_enveloping", "rewriting", "commutative", "star", "commutator", "ore_witness",
    "rees_of_filtered", "dehomogenize", "reduce_word", "moyal_poly", "random_hpoly",
    "random_poly",
]
