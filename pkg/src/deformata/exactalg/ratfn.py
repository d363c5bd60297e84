"""Rational functions: reduced quotients of :class:`Poly`."""
from __future__ import annotations

from fractions import Fraction

from ..errors import InputError
from .poly import Poly, gcd


class RatFn:
    """``num/den`` with gcd(num, den) = 1 and den's leading coefficient equal to 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            den = Poly.const(1, num.vars)
        elif not isinstance(den, Poly):
            den = Poly.const(den, num.vars)
        num, den = num._coerce(den)
        if den.is_zero():
            raise InputError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, Poly.const(1, num.vars)
            return
        if not den.is_constant():
            g = gcd(num, den)
            if not g.is_constant():
                num, den = num.divexact(g), den.divexact(g)
        lc = den.leading_coeff()
        if lc != 1:
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num, den):
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    @property
    def vars(self):
        return self.num.vars

    def with_vars(self, vars):
        return RatFn._raw(self.num.with_vars(vars), self.den.with_vars(vars))

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_poly(self):
        return self.den.is_constant()

    def is_constant(self):
        return self.den.is_constant() and self.num.is_constant()

    def constant_value(self):
        return self.num.constant_value() / self.den.constant_value()

    def degree(self):
        """deg(num) - deg(den); None for zero."""
        if self.is_zero():
            return None
        return self.num.degree() - self.den.degree()

    @staticmethod
    def _lift(x):
        if isinstance(x, RatFn):
            return x
        if isinstance(x, Poly):
            return RatFn._raw(x, Poly.const(1, x.vars))
        return RatFn._raw(Poly.const(x), Poly.const(1))

    def __neg__(self):
        return RatFn._raw(-self.num, self.den)

    def __add__(self, other):
        try:
            o = RatFn._lift(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return RatFn(self.num + o.num, self.den)
        return RatFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = RatFn._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = RatFn._lift(other)
        except TypeError:
            return NotImplemented
        return RatFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = RatFn._lift(other)
        except TypeError:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFn._lift(other) / self

    def __pow__(self, k):
        if k < 0:
            return RatFn(self.den ** (-k), self.num ** (-k))
        return RatFn._raw(self.num ** k, self.den ** k)

    def diff(self, var):
        """Quotient-rule partial derivative."""
        num = self.num.diff(var) * self.den - self.num * self.den.diff(var)
        return RatFn(num, self.den * self.den)

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.evaluate(point) / d

    def __eq__(self, other):
        try:
            o = RatFn._lift(other)
        except TypeError:
            return NotImplemented
        # reduced forms are unique, but cross-multiplying is robust to variable-order differences
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFn({str(self)!r})"

    def __str__(self):
        from ..frontend.printer import format_ratfn
        return format_ratfn(self)


def ratfn_normalize(num, den):
    """Reduced, denominator-normalized form of ``num/den``."""
    return RatFn(num, den)


def as_ratfn(x, vars=None):
    if isinstance(x, RatFn):
        r = x
    elif isinstance(x, Poly):
        r = RatFn._raw(x, Poly.const(1, x.vars))
    else:
        r = RatFn._raw(Poly.const(Fraction(x), vars or ()), Poly.const(1, vars or ()))
    return r.with_vars(vars) if vars is not None else r
