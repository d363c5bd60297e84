"""Exact computations with finite-order deformation quantizations of polynomial
algebras, their Poisson brackets, and finite-dimensional Hopf actions on them."""
from .errors import CommutativeError, DeformataError, InconclusiveError, InputError, PreconditionError

__version__ = "0.1.0"

__all__ = ["DeformataError", "InputError", "PreconditionError", "CommutativeError",
           "InconclusiveError", "__version__"]
