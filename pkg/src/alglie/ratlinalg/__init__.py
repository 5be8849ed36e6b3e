"""Exact rational linear algebra: matrices, polynomials, subspaces and integer lattices."""

from .lattice import IntegerLattice, hermite_normal_form, integer_kernel
from .matrix import CoordinateSolver, Q, QMatrix, Rational, bracket, kernel, rational_str, rref, solve_coordinates
from .poly import QPoly, charpoly, minpoly, poly_gcd, poly_xgcd, rational_roots, squarefree_part
from .subspace import Subspace, span_contains, subspace_equal, subspace_sum

__all__ = [
    "CoordinateSolver",
    "IntegerLattice",
    "Q",
    "QMatrix",
    "QPoly",
    "Rational",
    "Subspace",
    "bracket",
    "charpoly",
    "hermite_normal_form",
    "integer_kernel",
    "kernel",
    "minpoly",
    "poly_gcd",
    "poly_xgcd",
    "rational_roots",
    "rational_str",
    "rref",
    "solve_coordinates",
    "span_contains",
    "squarefree_part",
    "subspace_equal",
    "subspace_sum",
]
