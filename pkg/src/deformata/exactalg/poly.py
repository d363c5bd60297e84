"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Poly` is a mapping from exponent vectors to nonzero
:class:`fractions.Fraction` coefficients over an ordered tuple of variable
names. Values are immutable. Operands with different variable lists are
aligned by symbol name before combining.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd as gcd_int
from numbers import Rational

from ..errors import InputError


def _frac(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"not an exact scalar: {c!r}")


class Poly:
    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars=(), terms=None):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean = {}
        if terms:
            for e, c in terms.items():
                c = _frac(c)
                if c:
                    e = tuple(e)
                    if len(e) != n:
                        raise InputError(f"exponent {e} does not match variables {self.vars}")
                    clean[e] = clean.get(e, 0) + c
            clean = {e: c for e, c in clean.items() if c}
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars, terms):
        # terms are trusted: clean tuples, nonzero Fractions
        p = object.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c, vars=()):
        vars = tuple(vars)
        c = _frac(c)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def var(cls, name, vars=None):
        vars = tuple(vars) if vars is not None else (name,)
        if name not in vars:
            raise InputError(f"unknown variable {name!r}")
        e = tuple(1 if v == name else 0 for v in vars)
        return cls._raw(vars, {e: Fraction(1)})

    @classmethod
    def monomial(cls, exps, coeff=1, vars=()):
        return cls(vars, {tuple(exps): coeff})

    @classmethod
    def gens(cls, vars):
        vars = tuple(vars)
        return [cls.var(v, vars) for v in vars]

    # -- alignment ----------------------------------------------------------

    def with_vars(self, vars):
        """Re-express over ``vars``; every variable actually used must be present."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        index = {v: i for i, v in enumerate(vars)}
        pos = []
        for i, v in enumerate(self.vars):
            if v in index:
                pos.append(index[v])
            else:
                if any(e[i] for e in self.terms):
                    raise InputError(f"variable {v!r} not in {vars}")
                pos.append(None)
        n = len(vars)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, k in enumerate(e):
                if k:
                    ne[pos[i]] = k
            out[tuple(ne)] = c
        return Poly._raw(vars, out)

    def used_vars(self):
        return tuple(v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms))

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.vars == self.vars:
                return self, other
            merged = self.vars + tuple(v for v in other.vars if v not in self.vars)
            return self.with_vars(merged), other.with_vars(merged)
        try:
            return self, Poly.const(other, self.vars)
        except TypeError:
            return None, None

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        """The constant coefficient (ℏ-free scalar part)."""
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def is_monomial(self):
        return len(self.terms) == 1

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self):
        return Poly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        out = dict(a.terms)
        for e, c in b.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(a.vars, out)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = _frac(c)
        if not c:
            return Poly._raw(self.vars, {})
        return Poly._raw(self.vars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        a, b = self._coerce(other)
        out = {}
        bt = list(b.terms.items())
        for e1, c1 in a.terms.items():
            for e2, c2 in bt:
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly._raw(a.vars, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("exponent must be an int")
        if k < 0:
            raise InputError("negative exponent for a polynomial")
        result = Poly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        # division by scalars only; polynomial quotients go through divexact / RatFn
        if isinstance(other, Poly):
            if other.is_constant() and other:
                return self.scale(1 / other.constant_value())
            raise TypeError("use divexact() or RatFn for polynomial division")
        return self.scale(1 / _frac(other))

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            if self.vars == other.vars:
                return self.terms == other.terms
            a, b = self._coerce(other)
            return a.terms == b.terms
        try:
            c = _frac(other)
        except TypeError:
            return NotImplemented
        return self.is_constant() and self.constant_value() == c

    def __hash__(self):
        if self._hash is None:
            used = self.used_vars()
            p = self.with_vars(tuple(sorted(used)))
            self._hash = hash(frozenset(p.terms.items()) | {tuple(sorted(used))})
        return self._hash

    # -- structure ----------------------------------------------------------

    def sorted_terms(self, reverse=True):
        """Terms in lexicographic order of exponent vectors (leading first by default)."""
        return sorted(self.terms.items(), reverse=reverse)

    def leading_exponent(self):
        return max(self.terms) if self.terms else None

    def leading_coeff(self):
        return self.terms[max(self.terms)] if self.terms else Fraction(0)

    def monic(self):
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coeff())

    def degree(self, var=None):
        """Total degree, or degree in ``var``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self._index(var)
        return max(e[i] for e in self.terms)

    def weighted_degree(self, weights):
        if not self.terms:
            return -1
        return max(sum(w * k for w, k in zip(weights, e)) for e in self.terms)

    def _index(self, var):
        if isinstance(var, int):
            return var
        try:
            return self.vars.index(var)
        except ValueError:
            raise InputError(f"unknown variable {var!r}") from None

    def diff(self, var, k=1):
        i = self._index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] >= k:
                ne = list(e)
                ne[i] -= k
                out[tuple(ne)] = c * (factorial(e[i]) // factorial(e[i] - k))
        return Poly._raw(self.vars, out)

    def coeffs_in(self, var):
        """Split as a univariate polynomial in ``var``: ``{power: coefficient Poly}``."""
        i = self._index(var)
        groups = {}
        for e, c in self.terms.items():
            ne = e[:i] + (0,) + e[i + 1:]
            groups.setdefault(e[i], {})[ne] = c
        return {k: Poly._raw(self.vars, t) for k, t in groups.items()}

    def evaluate(self, point):
        """Evaluate at ``point`` (mapping variable name -> scalar); all used variables required."""
        vals = []
        for v in self.vars:
            vals.append(_frac(point[v]) if v in point else None)
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    if x is None:
                        raise InputError("missing value for a used variable")
                    t *= x ** k
            total += t
        return total

    def subs(self, mapping):
        """Substitute Polys (or scalars) for variables; unmapped variables stay."""
        result = Poly((), {})
        gens = {v: Poly.var(v, self.vars) for v in self.vars}
        images = {v: (mapping[v] if isinstance(mapping.get(v), Poly) else
                      Poly.const(mapping[v], self.vars)) if v in mapping else gens[v]
                  for v in self.vars}
        for e, c in self.terms.items():
            t = Poly.const(c, self.vars)
            for v, k in zip(self.vars, e):
                if k:
                    t = t * images[v] ** k
            result = result + t
        return result

    def divexact(self, other):
        """Exact quotient ``self / other``; raises :class:`ArithmeticError` if not exact."""
        a, b = self._coerce(other)
        if b.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        eb = max(b.terms)
        cb = b.terms[eb]
        rest = [(e, c) for e, c in b.terms.items() if e != eb]
        r = dict(a.terms)
        q = {}
        while r:
            er = max(r)
            mono = tuple(x - y for x, y in zip(er, eb))
            if min(mono) < 0:
                raise ArithmeticError("inexact polynomial division")
            c = r.pop(er) / cb
            q[mono] = c
            for e, cc in rest:
                ne = tuple(x + y for x, y in zip(mono, e))
                s = r.get(ne, 0) - c * cc
                if s:
                    r[ne] = s
                else:
                    r.pop(ne, None)
        return Poly._raw(a.vars, q)

    def __repr__(self):
        from ..frontend.printer import format_poly
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        from ..frontend.printer import format_poly
        return format_poly(self)


def monomials_upto(nvars, d):
    """Exponent vectors of total degree <= d, ordered by degree then lexicographically descending."""
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for k in range(left, -1, -1):
            rec(prefix + (k,), left - k, slots - 1)

    for deg in range(d + 1):
        if nvars == 0:
            if deg == 0:
                out.append(())
            continue
        rec((), deg, nvars)
    return out


# -- gcd ----------------------------------------------------------------------

def _prem(a, b, i):
    """Pseudo-remainder of a by b as univariate polynomials in variable ``i``."""
    db = b.degree(i)
    lcb = b.coeffs_in(i)[db]
    r = a
    x = Poly.var(a.vars[i], a.vars)
    while r and r.degree(i) >= db:
        dr = r.degree(i)
        lcr = r.coeffs_in(i)[dr]
        r = lcb * r - lcr * x ** (dr - db) * b
    return r


def content(p, i):
    """Gcd of the coefficients of ``p`` viewed as univariate in variable ``i`` (monic)."""
    g = None
    for c in p.coeffs_in(i).values():
        g = c.monic() if g is None else gcd(g, c)
        if g.is_constant():
            return Poly.const(1, p.vars)
    return g if g is not None else Poly.const(0, p.vars)


def primitive_part(p, i):
    if p.is_zero():
        return p
    return p.divexact(content(p, i))


def _uni_gcd_degree(a, b):
    """Degree of gcd of univariate coefficient lists (index = power) over Q."""
    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p
    a, b = trim(list(a)), trim(list(b))
    while b:
        r = list(a)
        while len(r) >= len(b) and r:
            c = r[-1] / b[-1]
            off = len(r) - len(b)
            for k, v in enumerate(b):
                r[off + k] -= c * v
            trim(r)
        a, b = b, r
    return len(a) - 1


_POINTS = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _degree_bound(a, b, i):
    """Upper bound for deg_i gcd(a, b): specialize the other variables where lc_i(a) survives."""
    da = a.degree(i)
    ca, cb = a.coeffs_in(i), b.coeffs_in(i)
    others = [v for k, v in enumerate(a.vars) if k != i]
    for t, base in enumerate(_POINTS):
        pt = {v: Fraction(_POINTS[(t + k) % len(_POINTS)] * (1 if k % 2 else -1) + k)
              for k, v in enumerate(others)}
        if not ca[da].evaluate(pt):
            continue
        ua = [ca[k].evaluate(pt) if k in ca else Fraction(0) for k in range(da + 1)]
        ub = [cb[k].evaluate(pt) if k in cb else Fraction(0) for k in range(b.degree(i) + 1)]
        return _uni_gcd_degree(ua, ub)
    return min(da, b.degree(i))


def _integer_primitive(p):
    """Rescale to coprime integer coefficients (keeps the same associate class)."""
    if p.is_zero():
        return p
    den = 1
    num = 0
    for c in p.terms.values():
        den = den * c.denominator // gcd_int(den, c.denominator)
    for c in p.terms.values():
        num = gcd_int(num, (c * den).numerator)
    return p.scale(Fraction(den, num))


def gcd(a, b):
    """Monic greatest common divisor over Q (primitive PRS with recursive content)."""
    a, b = a._coerce(b)
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return Poly.const(1, a.vars)
    used = [i for i in range(len(a.vars))
            if any(e[i] for e in a.terms) or any(e[i] for e in b.terms)]
    if all(a.degree(i) and b.degree(i) for i in used):
        bounds = {i: _degree_bound(a, b, i) for i in used}
        if not any(bounds.values()):
            return Poly.const(1, a.vars)
        flat = [i for i in used if not bounds[i]]
    else:
        flat = [next(i for i in used if not (a.degree(i) and b.degree(i)))]
    if flat:
        # the gcd does not involve variable i: fold over the coefficients in i
        i = flat[0]
        g = None
        for c in list(a.coeffs_in(i).values()) + list(b.coeffs_in(i).values()):
            g = c.monic() if g is None else gcd(g, c)
            if g.is_constant():
                return Poly.const(1, a.vars)
        return g
    i = used[0]
    ca, cb = content(a, i), content(b, i)
    pa, pb = a.divexact(ca), b.divexact(cb)
    g = gcd(ca, cb)
    if pa.degree(i) < pb.degree(i):
        pa, pb = pb, pa
    while pb:
        r = _prem(pa, pb, i)
        pa, pb = pb, _integer_primitive(primitive_part(r, i))
        if pb and pb.degree(i) == 0:
            pa = Poly.const(1, a.vars)
            break
    return (g * pa.monic()).monic()


def lcm(a, b):
    a, b = a._coerce(b)
    if a.is_zero() or b.is_zero():
        return Poly.const(0, a.vars)
    return (a * b).divexact(gcd(a, b)).monic()
