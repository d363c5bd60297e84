"""Finite-dimensional Hopf algebras given by structure tensors over Q.

Elements are coordinate tuples of Fractions in the declared basis. The
coproduct of a basis vector is stored sparsely as ``{(p, q): coeff}``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, lcm as ilcm

from ..errors import InconclusiveError, InputError, PreconditionError
from ..exactalg import Matrix, nullspace_scalar, reduce_vector, rref

ZERO = Fraction(0)
ONE = Fraction(1)


def _vec(d, items=()):
    v = [ZERO] * d
    for i, c in items:
        v[i] += c
    return tuple(v)


def _axpy(acc, c, v):
    if c:
        for i, x in enumerate(v):
            if x:
                acc[i] += c * x


def _tensor_add(acc, c, t):
    if c:
        for k, x in t.items():
            v = acc.get(k, ZERO) + c * x
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)


def format_element(labels, v):
    parts = []
    for lab, c in zip(labels, v):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        body = lab if a == 1 else f"{a}*{lab}"
        parts.append((sign, body))
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    labels: tuple
    mul: tuple        # mul[i][j] = coordinates of e_i e_j
    unit: tuple
    comul: tuple      # comul[k] = {(p, q): coeff}
    counit: tuple
    antipode: tuple   # antipode[k] = coordinates of S(e_k)
    name: str = ""
    _index: dict = field(default=None, repr=False)

    def __post_init__(self):
        d = len(self.labels)
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        if len(set(self.labels)) != d:
            raise InputError("basis labels must be distinct")
        if (len(self.mul) != d or any(len(r) != d for r in self.mul)
                or any(len(v) != d for r in self.mul for v in r)):
            raise InputError(f"multiplication tensor must be {d}x{d}x{d}")
        if len(self.unit) != d or len(self.counit) != d:
            raise InputError("unit and counit must have the basis dimension")
        if len(self.comul) != d or len(self.antipode) != d or any(len(v) != d for v in self.antipode):
            raise InputError("comultiplication/antipode dimension mismatch")
        for t in self.comul:
            if any(not (0 <= p < d and 0 <= q < d) for p, q in t):
                raise InputError("comultiplication index out of range")
        object.__setattr__(self, "mul", tuple(tuple(tuple(Fraction(x) for x in v) for v in r)
                                              for r in self.mul))
        object.__setattr__(self, "unit", tuple(Fraction(x) for x in self.unit))
        object.__setattr__(self, "counit", tuple(Fraction(x) for x in self.counit))
        object.__setattr__(self, "antipode", tuple(tuple(Fraction(x) for x in v)
                                                   for v in self.antipode))
        object.__setattr__(self, "comul", tuple({k: Fraction(c) for k, c in t.items() if c}
                                                for t in self.comul))
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})

    @property
    def dim(self):
        return len(self.labels)

    def index(self, label):
        try:
            return self._index[str(label)]
        except KeyError:
            raise InputError(f"unknown Hopf basis label {label!r}") from None

    def basis(self, i):
        if isinstance(i, str):
            i = self.index(i)
        return _vec(self.dim, [(i, ONE)])

    def element(self, coeffs):
        """Element from ``{label or index: coeff}``."""
        return _vec(self.dim, [(self.index(k) if isinstance(k, str) else k, Fraction(c))
                               for k, c in coeffs.items()])

    def one(self):
        return self.unit

    def mult(self, u, v):
        acc = [ZERO] * self.dim
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        _axpy(acc, a * b, self.mul[i][j])
        return tuple(acc)

    def delta(self, u):
        acc = {}
        for k, c in enumerate(u):
            _tensor_add(acc, c, self.comul[k])
        return acc

    def eps(self, u):
        return sum((a * b for a, b in zip(u, self.counit)), ZERO)

    def S(self, u):
        acc = [ZERO] * self.dim
        for k, c in enumerate(u):
            _axpy(acc, c, self.antipode[k])
        return tuple(acc)

    def unit_index(self):
        """Index of the unit if it is a basis vector, else None."""
        nz = [i for i, c in enumerate(self.unit) if c]
        if len(nz) == 1 and self.unit[nz[0]] == 1:
            return nz[0]
        return None

    def format(self, v):
        return format_element(self.labels, v)

    def same_tensors(self, other):
        return (self.dim == other.dim and self.mul == other.mul and self.unit == other.unit
                and self.comul == other.comul and self.counit == other.counit
                and self.antipode == other.antipode)

    def __repr__(self):
        return f"HopfAlgebra({self.name or 'H'}, basis={list(self.labels)})"


# -- axioms -------------------------------------------------------------------

@dataclass
class HopfReport:
    checks: dict
    witnesses: dict

    @property
    def ok(self):
        return all(self.checks.values())

    def failures(self):
        return [k for k, v in self.checks.items() if not v]


def _tensor_mult(H, s, t):
    acc = {}
    for (p, q), a in s.items():
        for (r, u), b in t.items():
            left = H.mul[p][r]
            right = H.mul[q][u]
            for i, x in enumerate(left):
                if x:
                    for j, y in enumerate(right):
                        if y:
                            v = acc.get((i, j), ZERO) + a * b * x * y
                            if v:
                                acc[(i, j)] = v
                            else:
                                acc.pop((i, j))
    return acc


def hopf_verify(H):
    """Check every Hopf algebra axiom on basis elements; first counterexample recorded."""
    d = H.dim
    checks, wit = {}, {}
    e = [H.basis(i) for i in range(d)]
    lab = H.labels

    def record(name, ok, witness=None):
        if name not in checks:
            checks[name] = True
        if not ok and checks[name]:
            checks[name] = False
            wit[name] = witness

    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = H.mult(H.mult(e[i], e[j]), e[k])
                rhs = H.mult(e[i], H.mult(e[j], e[k]))
                record("associativity", lhs == rhs, (lab[i], lab[j], lab[k]))
    for i in range(d):
        record("unit", H.mult(H.unit, e[i]) == e[i] == H.mult(e[i], H.unit), (lab[i],))
    for i in range(d):
        delta = H.comul[i]
        left, right = {}, {}
        for (p, q), c in delta.items():
            for (r, s), x in H.comul[p].items():
                k = (r, s, q)
                left[k] = left.get(k, ZERO) + c * x
            for (r, s), x in H.comul[q].items():
                k = (p, r, s)
                right[k] = right.get(k, ZERO) + c * x
        left = {k: v for k, v in left.items() if v}
        right = {k: v for k, v in right.items() if v}
        record("coassociativity", left == right, (lab[i],))
        l1 = [ZERO] * d
        r1 = [ZERO] * d
        for (p, q), c in delta.items():
            l1[q] += c * H.counit[p]
            r1[p] += c * H.counit[q]
        record("counit", tuple(l1) == e[i] == tuple(r1), (lab[i],))
        ms1 = [ZERO] * d
        ms2 = [ZERO] * d
        for (p, q), c in delta.items():
            _axpy(ms1, c, H.mult(H.antipode[p], e[q]))
            _axpy(ms2, c, H.mult(e[p], H.antipode[q]))
        target = tuple(H.counit[i] * x for x in H.unit)
        record("antipode", tuple(ms1) == target == tuple(ms2), (lab[i],))
    for i in range(d):
        for j in range(d):
            lhs = H.delta(H.mul[i][j])
            rhs = _tensor_mult(H, H.comul[i], H.comul[j])
            record("comultiplication is multiplicative", lhs == rhs, (lab[i], lab[j]))
            record("counit is multiplicative",
                   H.eps(H.mul[i][j]) == H.counit[i] * H.counit[j], (lab[i], lab[j]))
    unit_delta = H.delta(H.unit)
    ui = {}
    for p, a in enumerate(H.unit):
        for q, b in enumerate(H.unit):
            if a and b:
                ui[(p, q)] = a * b
    record("comultiplication is unital", unit_delta == ui, ("1",))
    record("counit is unital", H.eps(H.unit) == 1, ("1",))
    return HopfReport(checks, wit)


# -- constructors -------------------------------------------------------------

def sweedler():
    """Sweedler's 4-dimensional algebra: g² = 1, a² = 0, ga = -ag, Δa = a⊗1 + g⊗a."""
    labels = ("1", "g", "a", "ga")
    idx = lambda s, t: s + 2 * t
    mul = [[None] * 4 for _ in range(4)]
    for s in range(2):
        for t in range(2):
            for u in range(2):
                for v in range(2):
                    out = [ZERO] * 4
                    if t + v < 2:
                        out[idx((s + u) % 2, t + v)] = Fraction((-1) ** (t * u))
                    mul[idx(s, t)][idx(u, v)] = tuple(out)
    comul = [
        {(0, 0): 1},
        {(1, 1): 1},
        {(2, 0): 1, (1, 2): 1},
        {(3, 1): 1, (0, 3): 1},
    ]
    counit = (1, 1, 0, 0)
    antipode = [_vec(4, [(0, 1)]), _vec(4, [(1, 1)]), _vec(4, [(3, -1)]), _vec(4, [(2, 1)])]
    return HopfAlgebra(labels, mul, _vec(4, [(0, 1)]), comul, counit, antipode, name="sweedler")


def group_algebra(table, labels=None, name=""):
    """Group algebra from a Cayley table ``table[i][j] = index of g_i g_j``."""
    n = len(table)
    if n == 0 or any(len(r) != n for r in table):
        raise InputError("Cayley table must be square and non-empty")
    if any(not (0 <= x < n) for r in table for x in r):
        raise InputError("Cayley table entries out of range")
    ident = [e for e in range(n) if all(table[e][j] == j and table[j][e] == j for j in range(n))]
    if not ident:
        raise InputError("Cayley table has no identity element")
    e = ident[0]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise InputError("Cayley table is not associative")
    inv = []
    for a in range(n):
        cands = [b for b in range(n) if table[a][b] == e and table[b][a] == e]
        if not cands:
            raise InputError("Cayley table element without an inverse")
        inv.append(cands[0])
    if labels is None:
        labels = ["1" if a == e else f"g{a}" for a in range(n)]
    mul = [[_vec(n, [(table[i][j], 1)]) for j in range(n)] for i in range(n)]
    comul = [{(i, i): 1} for i in range(n)]
    antipode = [_vec(n, [(inv[i], 1)]) for i in range(n)]
    return HopfAlgebra(tuple(labels), mul, _vec(n, [(e, 1)]), comul, (1,) * n, antipode,
                       name=name or f"group{n}")


def cyclic_group(n):
    labels = ["1", "g"] + [f"g{k}" for k in range(2, n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return group_algebra(table, labels[:n], name=f"Z{n}")


# -- subspaces, ideals, radical ---------------------------------------------

@dataclass(frozen=True)
class SubspaceOfH:
    ambient: int
    basis: tuple  # RREF

    @classmethod
    def span(cls, ambient, vectors):
        return cls(ambient, rref(vectors, ambient))

    @classmethod
    def zero(cls, ambient):
        return cls(ambient, ())

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, v):
        return not any(reduce_vector(v, self.basis))

    def __le__(self, other):
        return all(other.contains(b) for b in self.basis)

    def describe(self, labels):
        return [format_element(labels, v) for v in self.basis]


def products_span(H, U, V):
    vecs = [H.mult(u, v) for u in U.basis for v in V.basis]
    return SubspaceOfH.span(H.dim, vecs)


def ideal_closure(H, vectors):
    """Two-sided ideal generated by ``vectors``."""
    J = SubspaceOfH.span(H.dim, vectors)
    e = [H.basis(i) for i in range(H.dim)]
    while True:
        new = list(J.basis)
        for b in J.basis:
            for x in e:
                new.append(H.mult(x, b))
                new.append(H.mult(b, x))
        K = SubspaceOfH.span(H.dim, new)
        if K.dim == J.dim:
            return J
        J = K


def algebra_radical(mul):
    """Jacobson radical via the trace form: x ∈ Rad iff tr(L_{xy}) = 0 for all basis y."""
    d = len(mul)
    trace = [[ZERO] * d for _ in range(d)]
    for k in range(d):
        for y in range(d):
            prod = mul[k][y]
            t = ZERO
            for j in range(d):
                for i, c in enumerate(prod):
                    if c:
                        t += c * mul[i][j][j]
            trace[k][y] = t
    m = Matrix([[trace[k][y] for k in range(d)] for y in range(d)], d)
    return SubspaceOfH.span(d, nullspace_scalar(m))


def radical(H):
    R = algebra_radical(H.mul)
    # nilpotency certificate
    P = R
    for _ in range(H.dim + 1):
        if P.dim == 0:
            break
        P = products_span(H, P, R)
    if P.dim:
        raise PreconditionError("trace-form radical is not nilpotent")
    return R


def radical_powers(H, R=None):
    R = radical(H) if R is None else R
    powers = [SubspaceOfH.span(H.dim, [H.basis(i) for i in range(H.dim)])]
    while powers[-1].dim:
        powers.append(products_span(H, powers[-1], R) if len(powers) > 1 else R)
    return powers


# -- quotients ------------------------------------------------------------------

class _Projector:
    def __init__(self, H, J):
        self.H = H
        self.J = J
        pivots = {next(i for i, x in enumerate(b) if x) for b in J.basis}
        self.keep = [i for i in range(H.dim) if i not in pivots]
        self.pos = {i: k for k, i in enumerate(self.keep)}
        self.images = [self(H.basis(i)) for i in range(H.dim)]

    def __call__(self, v):
        r = reduce_vector(v, self.J.basis)
        return tuple(r[i] for i in self.keep)

    def tensor(self, t):
        acc = {}
        for (p, q), c in t.items():
            for a, x in enumerate(self.images[p]):
                if x:
                    for b, y in enumerate(self.images[q]):
                        if y:
                            v = acc.get((a, b), ZERO) + c * x * y
                            if v:
                                acc[(a, b)] = v
                            else:
                                acc.pop((a, b))
        return acc


def hopf_ideal_defects(H, J):
    """Witnesses that J fails to be a Hopf ideal (empty list when it is one)."""
    pi = _Projector(H, J)
    out = []
    for b in J.basis:
        s = H.format(b)
        if H.eps(b):
            out.append(("counit", s))
        if pi.tensor(H.delta(b)):
            out.append(("coideal", s))
        if any(pi(H.S(b))):
            out.append(("antipode", s))
        for i in range(H.dim):
            if any(pi(H.mult(H.basis(i), b))) or any(pi(H.mult(b, H.basis(i)))):
                out.append(("ideal", s))
                break
    return out


def quotient_hopf(H, J):
    """H/J for a Hopf ideal J; complement basis = non-pivot columns of J's RREF."""
    defects = hopf_ideal_defects(H, J)
    if defects:
        raise InputError(f"not a Hopf ideal: {defects[0]}")
    pi = _Projector(H, J)
    keep = pi.keep
    labels = tuple(H.labels[i] for i in keep)
    mul = [[pi(H.mul[i][j]) for j in keep] for i in keep]
    comul = [pi.tensor(H.comul[i]) for i in keep]
    counit = tuple(H.counit[i] for i in keep)
    antipode = [pi(H.antipode[i]) for i in keep]
    return HopfAlgebra(labels, mul, pi(H.unit), comul, counit, antipode,
                       name=f"{H.name}/J" if H.name else "H/J"), pi


def largest_hopf_ideal(H, sub):
    """Largest Hopf ideal inside ``sub`` by iterated refinement (fixpoint within dim H steps)."""
    J = sub
    for _ in range(H.dim + 2):
        if J.dim == 0:
            return J
        pi = _Projector(H, J)
        cond_cols = []
        for b in J.basis:
            col = []
            col.append(H.eps(b))
            t = pi.tensor(H.delta(b))
            m = len(pi.keep)
            col.extend(t.get((p, q), ZERO) for p in range(m) for q in range(m))
            col.extend(pi(H.S(b)))
            for i in range(H.dim):
                col.extend(pi(H.mult(H.basis(i), b)))
                col.extend(pi(H.mult(b, H.basis(i))))
            cond_cols.append(col)
        rows = [[c[r] for c in cond_cols] for r in range(len(cond_cols[0]))]
        kernel = nullspace_scalar(Matrix(rows, J.dim))
        vecs = []
        for c in kernel:
            acc = [ZERO] * H.dim
            for coef, b in zip(c, J.basis):
                _axpy(acc, coef, b)
            vecs.append(acc)
        K = SubspaceOfH.span(H.dim, vecs)
        if K.dim == J.dim:
            return J
        J = K
    raise PreconditionError("Hopf ideal refinement did not converge")


# -- grouplikes -------------------------------------------------------------------

def dual_algebra(H):
    """Multiplication tensor and unit of H* in the dual basis (product dual to Δ)."""
    d = H.dim
    mul = [[[ZERO] * d for _ in range(d)] for _ in range(d)]
    for k, t in enumerate(H.comul):
        for (p, q), c in t.items():
            mul[p][q][k] += c
    mul = tuple(tuple(tuple(v) for v in r) for r in mul)
    return mul, H.counit


def _charpoly(M):
    """Coefficients c_0..c_n of det(λI - M) (Faddeev-LeVerrier)."""
    n = len(M)
    c = [ZERO] * (n + 1)
    c[n] = ONE
    Mk = [[ZERO] * n for _ in range(n)]
    for k in range(1, n + 1):
        AM = [[sum((M[i][l] * Mk[l][j] for l in range(n) if M[i][l] and Mk[l][j]), ZERO)
               for j in range(n)] for i in range(n)]
        Mk = [[AM[i][j] + (c[n - k + 1] if i == j else ZERO) for j in range(n)]
              for i in range(n)]
        tr = sum(sum((M[i][l] * Mk[l][i] for l in range(n)), ZERO) for i in range(n))
        c[n - k] = -tr / k
    return c


def _divisors(n):
    n = abs(n)
    if n > 10 ** 12:
        raise InconclusiveError("coefficients too large for rational-root search")
    out = set()
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            out.add(k)
            out.add(n // k)
    return out


def _rational_roots(c):
    den = 1
    for x in c:
        den = ilcm(den, x.denominator)
    a = [int(x * den) for x in c]
    roots = []
    while a and a[0] == 0:
        if 0 not in roots:
            roots.append(Fraction(0))
        a = a[1:]
    if len(a) <= 1:
        return roots
    cands = {Fraction(s * p, q) for p in _divisors(a[0]) for q in _divisors(a[-1]) for s in (1, -1)}
    for r in sorted(cands):
        v = ZERO
        for x in reversed(a):
            v = v * r + x
        if v == 0:
            roots.append(r)
    return roots


@dataclass(frozen=True)
class GrouplikeResult:
    elements: tuple
    status: str  # complete | partial | inconclusive
    semisimple_commutative_dual: bool
    note: str = ""


def grouplikes(H, seed=1, tries=6):
    """Rational grouplikes, found as characters of the dual algebra H*.

    A character of H* kills its radical and commutators, so it factors through
    C = H*/(Rad + [H*, H*]), a commutative semisimple algebra. Characters of C are
    left eigenvectors of a generic multiplication operator L_t.
    """
    rep = hopf_verify(H)
    if not rep.ok:
        raise InputError(f"not a Hopf algebra: {rep.failures()[0]} fails at {rep.witnesses[rep.failures()[0]]}")
    d = H.dim
    dmul, dunit = dual_algebra(H)
    R = algebra_radical(dmul)

    class _A:
        dim = d
        mul = dmul

        @staticmethod
        def basis(i):
            return _vec(d, [(i, ONE)])

        @staticmethod
        def mult(u, v):
            acc = [ZERO] * d
            for i, a in enumerate(u):
                if a:
                    for j, b in enumerate(v):
                        if b:
                            _axpy(acc, a * b, dmul[i][j])
            return tuple(acc)

    gens = list(R.basis)
    for i in range(d):
        for j in range(d):
            c = tuple(x - y for x, y in zip(dmul[i][j], dmul[j][i]))
            if any(c):
                gens.append(c)
    J = ideal_closure(_A, gens)
    pi = _Projector(_A, J)
    n = len(pi.keep)
    cmul = [[pi(dmul[i][j]) for j in pi.keep] for i in pi.keep]
    cunit = pi(dunit)
    sc = J.dim == 0
    if n == 0:
        return GrouplikeResult((), "complete", sc)
    rng = random.Random(seed)
    for _ in range(tries):
        t = [Fraction(rng.randint(-9, 9)) for _ in range(n)]
        M = [[ZERO] * n for _ in range(n)]
        for j in range(n):
            col = [ZERO] * n
            for i, a in enumerate(t):
                if a:
                    _axpy(col, a, cmul[i][j])
            for i in range(n):
                M[i][j] = col[i]
        roots = _rational_roots(_charpoly(M))
        chars = []
        ok = True
        for lam in roots:
            A = Matrix([[M[j][i] - (lam if i == j else ZERO) for j in range(n)] for i in range(n)], n)
            ker = nullspace_scalar(A)
            if len(ker) != 1:
                ok = False
                break
            chi = ker[0]
            norm = sum((a * b for a, b in zip(chi, cunit)), ZERO)
            if not norm:
                ok = False
                break
            chi = tuple(x / norm for x in chi)
            mult_ok = all(
                sum((a * b for a, b in zip(chi, cmul[i][j])), ZERO) == chi[i] * chi[j]
                for i in range(n) for j in range(n))
            if not mult_ok:
                ok = False
                break
            chars.append(chi)
        if not ok:
            continue
        elements = []
        for chi in chars:
            x = tuple(sum((a * b for a, b in zip(chi, pi.images[k])), ZERO) for k in range(d))
            delta = H.delta(x)
            outer = {(p, q): a * b for p, a in enumerate(x) for q, b in enumerate(x) if a and b}
            if delta != outer or H.eps(x) != 1:
                raise InconclusiveError("character did not pull back to a grouplike")
            elements.append(x)
        elements.sort(key=lambda v: (v != H.unit, [-abs(c) for c in v], v))
        status = "complete" if len(elements) == n else "partial"
        note = "" if status == "complete" else "remaining grouplikes are defined only over a field extension"
        return GrouplikeResult(tuple(elements), status, sc, note)
    return GrouplikeResult((), "inconclusive", sc, "no separating element found")


def cayley_table(H, elements):
    index = {v: i for i, v in enumerate(elements)}
    table = []
    for u in elements:
        row = []
        for v in elements:
            p = H.mult(u, v)
            if p not in index:
                raise InconclusiveError("grouplikes not closed under multiplication")
            row.append(index[p])
        table.append(row)
    return table


# -- associated graded of the radical filtration -------------------------------

def gr_radical_hopf(H):
    """gr H = ⊕ I^m / I^{m+1} for I = Rad(H), which must be a Hopf ideal."""
    R = radical(H)
    defects = hopf_ideal_defects(H, R)
    if defects:
        kind, wit = defects[0]
        raise PreconditionError(f"radical is not a Hopf ideal ({kind} fails at {wit})")
    powers = radical_powers(H, R)  # I^0 = H, I^1 = R, ..., last is 0
    basis, degrees = [], []
    for m in range(len(powers) - 1):
        lower = powers[m + 1]
        chosen = list(lower.basis)
        span = SubspaceOfH.span(H.dim, chosen)
        for v in powers[m].basis:
            if not span.contains(v):
                basis.append(v)
                degrees.append(m)
                chosen.append(v)
                span = SubspaceOfH.span(H.dim, chosen)
    d = H.dim
    P = Matrix([[basis[j][i] for j in range(d)] for i in range(d)], d)
    cols = []
    for i in range(d):
        e = tuple(Fraction(int(k == i)) for k in range(d))
        cols.append(_solve(P, e))

    def coords(v):
        acc = [ZERO] * d
        for i, c in enumerate(v):
            if c:
                _axpy(acc, c, cols[i])
        return tuple(acc)

    def keep_degree(v, deg):
        return tuple(c if degrees[k] == deg else ZERO for k, c in enumerate(v))

    mul = [[keep_degree(coords(H.mult(basis[i], basis[j])), degrees[i] + degrees[j])
            for j in range(d)] for i in range(d)]
    comul = []
    for i in range(d):
        t = H.delta(basis[i])
        acc = {}
        for (p, q), c in t.items():
            cp, cq = cols[p], cols[q]
            for a, x in enumerate(cp):
                if x:
                    for b, y in enumerate(cq):
                        if y and degrees[a] + degrees[b] == degrees[i]:
                            v = acc.get((a, b), ZERO) + c * x * y
                            if v:
                                acc[(a, b)] = v
                            else:
                                acc.pop((a, b))
        comul.append(acc)
    antipode = [keep_degree(coords(H.S(basis[i])), degrees[i]) for i in range(d)]
    counit = tuple(H.eps(basis[i]) if degrees[i] == 0 else ZERO for i in range(d))
    unit = keep_degree(coords(H.unit), 0)
    labels = []
    for v in basis:
        nz = [i for i, c in enumerate(v) if c]
        labels.append(H.labels[nz[0]] if len(nz) == 1 and v[nz[0]] == 1 else f"[{H.format(v)}]")
    G = HopfAlgebra(tuple(labels), mul, unit, comul, counit, antipode,
                    name=f"gr({H.name})" if H.name else "grH")
    return G, tuple(degrees)


def _solve(P, b):
    n = P.rows
    rows = [list(P.row(i)) + [b[i]] for i in range(n)]
    for k in range(n):
        p = next(i for i in range(k, n) if rows[i][k])
        rows[k], rows[p] = rows[p], rows[k]
        piv = rows[k][k]
        rows[k] = [x / piv for x in rows[k]]
        for i in range(n):
            if i != k and rows[i][k]:
                f = rows[i][k]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[k])]
    return tuple(r[n] for r in rows)
