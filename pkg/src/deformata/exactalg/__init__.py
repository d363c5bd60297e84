"""Exact scalars, polynomials, rational functions and linear algebra over Q."""
from fractions import Fraction

from .linalg import (Matrix, det_ratfn, in_span, nullspace_scalar, rank_function_field,
                     rank_scalar, reduce_vector, rref, solve_ratfn)
from .poly import Poly, gcd, lcm, monomials_upto
from .ratfn import RatFn, as_ratfn, ratfn_normalize

Scalar = Fraction


def poly_arith(op, a, b):
    """Dispatch ``add``, ``sub``, ``mul`` or ``pow`` on polynomials."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        return a ** b
    raise ValueError(f"unknown polynomial operation {op!r}")


__all__ = [
    "Fraction", "Scalar", "Poly", "RatFn", "Matrix", "gcd", "lcm", "monomials_upto",
    "as_ratfn", "ratfn_normalize", "nullspace_scalar", "rank_scalar", "rank_function_field",
    "det_ratfn", "solve_ratfn", "rref", "reduce_vector", "in_span", "poly_arith",
]
