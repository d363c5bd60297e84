"""Exact dense linear algebra over Q and over rational-function fields.

Both flavours run fraction-free (Bareiss) elimination: scalar rows are
scaled to integers, rational-function rows are scaled to polynomials, and
elimination proceeds with exact division by the previous pivot.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm as ilcm

from ..errors import InputError
from .poly import Poly, lcm
from .ratfn import RatFn, as_ratfn


class Matrix:
    """Dense ``rows x cols`` grid of Fractions or RatFns (immutable)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        entries = tuple(tuple(r) for r in entries)
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else (cols or 0)
        if any(len(r) != self.cols for r in entries):
            raise InputError("ragged matrix")
        self.entries = entries

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[Fraction(0)] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def transpose(self):
        return Matrix([list(self.column(j)) for j in range(self.cols)], self.rows)

    def submatrix(self, rows, cols):
        return Matrix([[self.entries[i][j] for j in cols] for i in rows], len(cols))

    def is_ratfn(self):
        return any(isinstance(x, (RatFn, Poly)) for r in self.entries for x in r)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise InputError("dimension mismatch")
            out = []
            for i in range(self.rows):
                row = []
                for j in range(other.cols):
                    s = 0
                    for k in range(self.cols):
                        a = self.entries[i][k]
                        if a:
                            b = other.entries[k][j]
                            if b:
                                s = s + a * b
                    row.append(s if s != 0 or not isinstance(s, int) else Fraction(0))
                out.append(row)
            return Matrix(out, other.cols)
        # matrix-vector
        return tuple(sum((a * b for a, b in zip(r, other) if a and b), Fraction(0))
                     for r in self.entries)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"Matrix({[list(map(str, r)) for r in self.entries]})"


# -- fraction-free elimination -----------------------------------------------

def _bareiss(rows, divexact):
    """Fraction-free row echelon form in place; returns the pivot (row, col) list."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    prev = None
    r = 0
    pivots = []
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, m):
            a = rows[i][c]
            for j in range(c + 1, n):
                v = piv * rows[i][j] - a * rows[r][j]
                if prev is not None and v:
                    v = divexact(v, prev)
                rows[i][j] = v
            rows[i][c] = rows[i][c] * 0
        pivots.append((r, c))
        prev = piv
        r += 1
        if r == m:
            break
    return pivots


def _integer_rows(m):
    out = []
    for row in m.entries:
        row = [Fraction(x) for x in row]
        scale = 1
        for x in row:
            scale = ilcm(scale, x.denominator)
        out.append([int(x * scale) for x in row])
    return out


def _poly_rows(m):
    vars = ()
    for row in m.entries:
        for x in row:
            if isinstance(x, (Poly, RatFn)):
                for v in x.vars:
                    if v not in vars:
                        vars += (v,)
    out = []
    for row in m.entries:
        row = [as_ratfn(x, vars) for x in row]
        scale = Poly.const(1, vars)
        for x in row:
            if not x.den.is_constant():
                scale = lcm(scale, x.den)
        out.append([(x.num * scale).divexact(x.den) for x in row])
    return out, vars


def rank_scalar(m):
    if not m.rows or not m.cols:
        return 0
    rows = _integer_rows(m)
    return len(_bareiss(rows, lambda a, b: a // b))


def nullspace_scalar(m):
    """Basis of {v : m v = 0}: one vector per free column, 1 there and 0 on the other free columns."""
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [tuple(Fraction(int(i == j)) for i in range(m.cols)) for j in range(m.cols)]
    rows = _integer_rows(m)
    pivots = _bareiss(rows, lambda a, b: a // b)
    pivot_cols = [c for _, c in pivots]
    free = [c for c in range(m.cols) if c not in set(pivot_cols)]
    basis = []
    for f in free:
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for r, c in reversed(pivots):
            s = sum((rows[r][j] * x[j] for j in range(c + 1, m.cols) if rows[r][j] and x[j]),
                    Fraction(0))
            x[c] = -s / rows[r][c]
        basis.append(tuple(x))
    return basis


def rank_function_field(m):
    """Rank over the field of rational functions in the entries' variables."""
    if not m.rows or not m.cols:
        return 0
    rows, _ = _poly_rows(m)
    return len(_bareiss(rows, lambda a, b: a.divexact(b)))


def det_ratfn(m):
    """Determinant of a square matrix of Polys/RatFns (fraction-free)."""
    if m.rows != m.cols:
        raise InputError("determinant of a non-square matrix")
    if m.rows == 0:
        return RatFn(1)
    vars = ()
    for row in m.entries:
        for x in row:
            if isinstance(x, (Poly, RatFn)):
                for v in x.vars:
                    if v not in vars:
                        vars += (v,)
    rows = []
    scales = Poly.const(1, vars)
    for row in m.entries:
        row = [as_ratfn(x, vars) for x in row]
        s = Poly.const(1, vars)
        for x in row:
            if not x.den.is_constant():
                s = lcm(s, x.den)
        scales = scales * s
        rows.append([(x.num * s).divexact(x.den) for x in row])
    n = m.rows
    sign = 1
    prev = None
    for k in range(n):
        p = next((i for i in range(k, n) if rows[i][k]), None)
        if p is None:
            return RatFn(Poly.const(0, vars))
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]
                if prev is not None and v:
                    v = v.divexact(prev)
                rows[i][j] = v
        prev = rows[k][k]
    return RatFn(rows[n - 1][n - 1] * sign, scales)


def solve_ratfn(a, b):
    """Solve the square system a x = b over the rational-function field (Gauss-Jordan)."""
    n = a.rows
    rows = [[as_ratfn(x) for x in a.row(i)] + [as_ratfn(b[i])] for i in range(n)]
    for k in range(n):
        p = next((i for i in range(k, n) if rows[i][k]), None)
        if p is None:
            raise InputError("singular system")
        rows[k], rows[p] = rows[p], rows[k]
        piv = rows[k][k]
        rows[k] = [x / piv for x in rows[k]]
        for i in range(n):
            if i != k and rows[i][k]:
                f = rows[i][k]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[k])]
    return tuple(r[n] for r in rows)


# -- subspaces of Q^d ---------------------------------------------------------

def rref(vectors, dim):
    """Reduced row echelon basis of span(vectors) in Q^dim, as a tuple of tuples."""
    rows = [[Fraction(x) for x in v] for v in vectors if any(v)]
    out = []
    pivots = []
    r = 0
    for c in range(dim):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    out = [tuple(rows[i]) for i in range(r)]
    return tuple(out)


def pivot_columns(basis):
    return [next(j for j, x in enumerate(v) if x) for v in basis]


def reduce_vector(v, basis):
    """Remainder of v modulo the span of an RREF basis."""
    v = list(v)
    for b, p in zip(basis, pivot_columns(basis)):
        if v[p]:
            f = v[p]
            v = [x - f * y for x, y in zip(v, b)]
    return tuple(v)


def in_span(v, basis):
    return not any(reduce_vector(v, basis))
