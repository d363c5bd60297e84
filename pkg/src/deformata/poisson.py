"""Induced Poisson brackets, their extension to Q(A₀), Jacobi checks and centers."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CommutativeError, InputError
from .exactalg import Matrix, Poly, RatFn, as_ratfn, monomials_upto, nullspace_scalar


@dataclass(frozen=True, eq=False)
class PoissonStructure:
    """Generator brackets ``{x_i, x_j}`` for i < j, extended as a biderivation."""

    variables: tuple
    bracket: dict  # (i, j), i < j -> Poly
    depth: int = 1
    valuations: dict = field(default=None)  # (i, j) -> ℏ-valuation of [x_i, x_j] (diagnostic)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        clean = {}
        for (i, j), p in self.bracket.items():
            if not i < j:
                raise InputError("bracket keys must satisfy i < j")
            p = p.with_vars(self.variables)
            if p:
                clean[(i, j)] = p
        object.__setattr__(self, "bracket", clean)

    @classmethod
    def from_names(cls, variables, brackets, depth=1):
        """``brackets`` maps (a, b) -> Poly meaning {a, b}; (b, a) entries are negated."""
        variables = tuple(variables)
        idx = {v: i for i, v in enumerate(variables)}
        table = {}
        for (a, b), p in brackets.items():
            i, j = idx[a], idx[b]
            if i == j:
                if p:
                    raise InputError("{x, x} must vanish")
                continue
            if not isinstance(p, Poly):
                p = Poly.const(p, variables)
            p = p.with_vars(variables)
            if i > j:
                i, j, p = j, i, -p
            if (i, j) in table and table[(i, j)] != p:
                raise InputError(f"bracket {{{a},{b}}} is not antisymmetric")
            table[(i, j)] = p
        return cls(variables, table, depth)

    def gen_bracket(self, i, j):
        if i == j:
            return Poly.const(0, self.variables)
        if i < j:
            return self.bracket.get((i, j), Poly.const(0, self.variables))
        return -self.bracket.get((j, i), Poly.const(0, self.variables))

    def items_by_name(self):
        return {(self.variables[i], self.variables[j]): p for (i, j), p in self.bracket.items()}

    def is_zero(self):
        return not self.bracket

    def __eq__(self, other):
        return (isinstance(other, PoissonStructure) and self.variables == other.variables
                and self.bracket == other.bracket)


def induced_bracket(alg):
    """Bracket of depth m: the ℏ^m coefficient of generator commutators, m minimal."""
    n = len(alg.variables)
    comms = {}
    vals = {}
    for i in range(n):
        for j in range(i + 1, n):
            c = alg.commutator(alg.gen(alg.variables[i]), alg.gen(alg.variables[j]))
            comms[(i, j)] = c
            vals[(i, j)] = c.valuation()
    present = [v for v in vals.values() if v is not None]
    if not present:
        raise CommutativeError(f"no bracket at order <= {alg.order}: the algebra is commutative")
    m = min(present)
    table = {k: c.coeffs[m] for k, c in comms.items()}
    return PoissonStructure(alg.variables, table, depth=m, valuations=vals)


def bracket_of_lifts(alg, a, b, depth):
    """ℏ^depth coefficient of [a, b] for arbitrary lifts a, b."""
    return alg.commutator(a, b).coeffs[depth]


def _partials(P, f):
    return [f.diff(i) for i in range(len(P.variables))]


def bracket_poly(P, f, g):
    """{f, g} = Σ_{i<j} {x_i,x_j} (∂_i f ∂_j g - ∂_j f ∂_i g)."""
    vars = P.variables
    f = f.with_vars(vars) if isinstance(f, Poly) else Poly.const(f, vars)
    g = g.with_vars(vars) if isinstance(g, Poly) else Poly.const(g, vars)
    out = Poly.const(0, vars)
    if f.is_constant() or g.is_constant():
        return out
    df, dg = _partials(P, f), _partials(P, g)
    for (i, j), b in P.bracket.items():
        t = df[i] * dg[j] - df[j] * dg[i]
        if t:
            out = out + b * t
    return out


def bracket_rat(P, f, g):
    """Biderivation extension to fractions via the quotient rule in both slots."""
    vars = P.variables
    f, g = as_ratfn(f, vars), as_ratfn(g, vars)
    p1, q1, p2, q2 = f.num, f.den, g.num, g.den
    if q1.is_constant() and q2.is_constant():
        return RatFn(bracket_poly(P, p1, p2), q1 * q2)
    num = (bracket_poly(P, p1, p2) * q1 * q2
           - p1 * bracket_poly(P, q1, p2) * q2
           - p2 * bracket_poly(P, p1, q2) * q1
           + p1 * p2 * bracket_poly(P, q1, q2))
    return RatFn(num, q1 * q1 * q2 * q2)


def jacobi_defect(P, f, g, h):
    b = lambda u, v: bracket_poly(P, u, v)
    return b(f, b(g, h)) + b(g, b(h, f)) + b(h, b(f, g))


@dataclass(frozen=True)
class CenterReport:
    degree: int
    basis: tuple
    trivial: bool
    certified: bool


def polynomial_center(P, d):
    """Poisson-central polynomials of degree <= d (bounded-degree evidence only)."""
    if d < 0:
        raise InputError("degree bound must be non-negative")
    vars = P.variables
    n = len(vars)
    monos = monomials_upto(n, d)
    col = {}
    rows = {}
    for k, m in enumerate(monos):
        f = Poly(vars, {m: 1})
        for i in range(n):
            b = bracket_poly(P, f, Poly.var(vars[i], vars))
            for e, c in b.terms.items():
                rows.setdefault((i, e), {})[k] = c
        col[m] = k
    ordered = sorted(rows)
    mat = Matrix([[rows[r].get(k, Fraction(0)) for k in range(len(monos))] for r in ordered],
                 len(monos))
    kernel = nullspace_scalar(mat)
    basis = []
    for v in kernel:
        p = Poly(vars, {monos[k]: c for k, c in enumerate(v) if c}).monic()
        basis.append(p)
    basis.sort(key=lambda p: (p.degree(), [(-sum(e), e) for e, _ in p.sorted_terms()]))
    certified = all(not bracket_poly(P, p, Poly.var(v, vars)) for p in basis for v in vars)
    trivial = len(basis) == 1 and basis[0].is_constant()
    return CenterReport(d, tuple(basis), trivial, certified)


@dataclass(frozen=True)
class Centrality:
    central: bool
    witness: tuple | None  # (generator name, nonzero bracket) on failure

    def __bool__(self):
        return self.central


def is_central_rat(P, f):
    """Central in Q(A₀) iff {f, x_i} = 0 for every generator (biderivation)."""
    f = as_ratfn(f, P.variables)
    for v in P.variables:
        b = bracket_rat(P, f, Poly.var(v, P.variables))
        if b:
            return Centrality(False, (v, b))
    return Centrality(True, None)


__all__ = [
    "PoissonStructure", "CenterReport", "Centrality", "induced_bracket", "bracket_of_lifts",
    "bracket_poly", "bracket_rat", "jacobi_defect", "polynomial_center", "is_central_rat",
]
