"""Coaction matrices, the image of the Galois map, Plücker ratios and the
Poisson-commutation identities that drive the group-action dichotomy."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InputError, PreconditionError
from .exactalg import Matrix, Poly, as_ratfn, det_ratfn, monomials_upto, rank_function_field
from .hopfact.action import default_degree, module_algebra_check
from .poisson import bracket_poly, bracket_rat, is_central_rat


@dataclass(frozen=True)
class CoactionMatrix:
    row_labels: tuple  # Poly elements v
    entries: Matrix    # entry (v, i) = h_i · v, as RatFn
    column_labels: tuple

    @property
    def rows(self):
        return self.entries.rows

    def row_strings(self):
        return [[str(x) for x in r] for r in self.entries.entries]


def _mod_h(action):
    return action if action.order == 0 else action.reduce_mod_h()


def coaction_rows(action, elements):
    """Row for f is (h_1·f, ..., h_d·f) computed in A₀."""
    act0 = _mod_h(action)
    A, H = act0.algebra, act0.hopf
    rows = []
    labels = []
    for f in elements:
        f = f if isinstance(f, Poly) else Poly.const(f, A.variables)
        f = f.with_vars(A.variables)
        labels.append(f)
        rows.append([as_ratfn(act0.act_basis(k, f).coeffs[0]) for k in range(H.dim)])
    return CoactionMatrix(tuple(labels), Matrix(rows, H.dim), H.labels)


@dataclass(frozen=True)
class GaloisBasis:
    elements: tuple
    matrix: CoactionMatrix
    r: int
    degree: int
    ranks: tuple  # rank reached after each degree 0..d


def galois_basis(action, d=None, window=1):
    """Greedy row selection over normal-form monomials of degree ≤ d until the rank stabilizes."""
    act0 = _mod_h(action)
    if d is None:
        d = default_degree(act0) + 2
    A, H = act0.algebra, act0.hopf
    chosen, rows = [], []
    ranks = []
    by_degree = {}
    for e in monomials_upto(len(A.variables), d):
        by_degree.setdefault(sum(e), []).append(e)
    for deg in range(d + 1):
        for e in by_degree.get(deg, []):
            if len(chosen) == H.dim:
                break
            f = Poly(A.variables, {e: 1})
            row = [as_ratfn(act0.act_basis(k, f).coeffs[0]) for k in range(H.dim)]
            if rank_function_field(Matrix(rows + [row], H.dim)) > len(rows):
                rows.append(row)
                chosen.append(f)
        ranks.append(len(chosen))
    r = len(chosen)
    stable = r == H.dim or (len(ranks) > window and ranks[-1 - window] == r)
    if not stable:
        raise InputError(f"rank did not stabilize by degree {d}; increase the degree bound")
    return GaloisBasis(tuple(chosen), CoactionMatrix(tuple(chosen), Matrix(rows, H.dim), H.labels),
                       r, d, tuple(ranks))


@dataclass(frozen=True)
class PluckerChart:
    r: int
    I: tuple          # 0-based column subset
    minors: dict      # J -> RatFn
    ratios: dict      # J -> RatFn, Δ_J / Δ_I
    pivot: str

    def subset_label(self, J):
        return "{" + ",".join(str(j + 1) for j in J) + "}"

    def non_constant(self):
        return [(J, p) for J, p in self.ratios.items() if not p.is_constant()]


def _minor(m, J):
    return det_ratfn(m.submatrix(range(m.rows), J))


def plucker_ratios(B, pivot="dominant", I=None, neighbors_only=False):
    """Plücker chart of the row space of B.

    ``pivot`` picks I among the subsets with nonzero minor: "lex" takes the
    lexicographically first, "dominant" the one of largest degree (ties broken
    lexicographically). An explicit ``I`` (0-based) overrides both.
    """
    m = B.entries if isinstance(B, CoactionMatrix) else B
    r, d = m.rows, m.cols
    if r == 0:
        raise InputError("empty coaction matrix")
    if rank_function_field(m) != r:
        raise InputError("coaction matrix is rank deficient")
    minors = {J: _minor(m, J) for J in combinations(range(d), r)}
    nonzero = [J for J, x in minors.items() if x]
    if I is not None:
        pivot = "explicit"
        I = tuple(sorted(I))
        if not minors.get(I):
            raise InputError(f"chosen subset {I} has a vanishing minor")
    elif pivot == "lex":
        I = nonzero[0]
    elif pivot == "dominant":
        top = max(minors[J].degree() for J in nonzero)
        I = next(J for J in nonzero if minors[J].degree() == top)
    else:
        raise InputError(f"unknown pivot rule {pivot!r}")
    dI = minors[I]
    targets = minors
    if neighbors_only:
        targets = {J: x for J, x in minors.items() if len(set(J) & set(I)) >= r - 1}
    ratios = {J: x / dI for J, x in targets.items()}
    return PluckerChart(r, I, minors, ratios, pivot)


def defined_over_k(chart):
    """True iff every Plücker ratio is constant; otherwise the non-constant ratios."""
    bad = chart.non_constant()
    return not bad, bad


# -- Poisson commutation ------------------------------------------------------------

def certify_liftable(action, a0):
    """Invariance of the canonical lift of a0 at full truncation order."""
    A, H = action.algebra, action.hopf
    lift = A.lift(a0.with_vars(A.variables) if isinstance(a0, Poly) else a0)
    for k in range(H.dim):
        if action.act_basis(k, lift) != lift.scale(H.counit[k]):
            return False, H.labels[k]
    return True, None


@dataclass
class IdentityReport:
    ok: bool
    checked: int
    failures: list
    certification: str


def poiscom_check(action, P, a0, probes):
    """ρ_i({a0, f}) = {a0, ρ_i(f)} for every probe f and every basis index i."""
    ok, who = certify_liftable(action, a0)
    if not ok:
        raise PreconditionError(f"{a0} is not invariant at full order (moved by {who})")
    act0 = _mod_h(action)
    H = act0.hopf
    vars = P.variables
    a0 = a0.with_vars(vars)
    failures = []
    n = 0
    for f in probes:
        f = f.with_vars(vars)
        inner = bracket_poly(P, a0, f)
        for i in range(H.dim):
            lhs = act0.act_basis(i, inner).coeffs[0]
            rhs = bracket_poly(P, a0, act0.act_basis(i, f).coeffs[0])
            n += 1
            if lhs != rhs:
                failures.append({"h": H.labels[i], "f": str(f), "lhs": str(lhs), "rhs": str(rhs)})
    return IdentityReport(not failures, n, failures,
                          f"canonical lift invariant at order {action.order}")


def eq3_check(action, P, a0, chart=None):
    """{a0, Δ_J/Δ_I} vanishes, computed directly and through the minor identity."""
    ok, who = certify_liftable(action, a0)
    if not ok:
        raise PreconditionError(f"{a0} is not invariant at full order (moved by {who})")
    if chart is None:
        chart = plucker_ratios(galois_basis(action).matrix)
    vars = P.variables
    a0 = as_ratfn(a0, vars)
    dI = chart.minors[chart.I]
    bI = bracket_rat(P, a0, dI)
    failures = []
    for J, p in chart.ratios.items():
        direct = bracket_rat(P, a0, p)
        dJ = chart.minors[J]
        via_minors = (dI * bracket_rat(P, a0, dJ) - dJ * bI) / (dI * dI)
        if direct or via_minors or direct != via_minors:
            failures.append({"J": chart.subset_label(J), "ratio": str(p),
                             "direct": str(direct), "via minors": str(via_minors)})
    return IdentityReport(not failures, len(chart.ratios), failures,
                          f"canonical lift invariant at order {action.order}")


@dataclass
class CenterCheck:
    ok: bool
    reliable: bool
    results: list  # (J label, ratio, central, witness)


def plucker_center_check(chart, P, action=None):
    """Every non-constant Plücker ratio must be Poisson-central in Q(A₀).

    With ``action`` given, the chart is flagged unreliable when the action
    itself fails the module-algebra check at its own truncation order.
    """
    reliable = True
    if action is not None:
        reliable = module_algebra_check(action, trials=5, max_deg=2).ok
    results = []
    for J, p in chart.non_constant():
        c = is_central_rat(P, p)
        w = None if c.central else (c.witness[0], str(c.witness[1]))
        results.append((chart.subset_label(J), p, c.central, w))
    return CenterCheck(all(x[2] for x in results), reliable, results)


__all__ = [
    "CoactionMatrix", "GaloisBasis", "PluckerChart", "IdentityReport", "CenterCheck",
    "coaction_rows", "galois_basis", "plucker_ratios", "defined_over_k", "certify_liftable",
    "poiscom_check", "eq3_check", "plucker_center_check",
]
