"""Exact verification of torus certificates inside the exceptional Lie algebras.

The tower is built from scratch in exact arithmetic: a degree-4 cyclotomic
scalar field, octonions over it, the 27-dimensional exceptional Jordan
algebra, and the standard models of f4, e6, e7 and e8 on top.  Every claim
checked by the suites is an identity of exact matrices or brackets; no
floating point is involved anywhere.
"""

from .scalars import Cyclo, Rat, constant, field_arith, is_real, tau_conj

__version__ = "0.1.0"

__all__ = [
    "Cyclo",
    "Rat",
    "constant",
    "field_arith",
    "is_real",
    "tau_conj",
    "__version__",
]
