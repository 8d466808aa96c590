"""Exact polynomial and matrix arithmetic over Z and Q."""

from .ideal import ideal_constant, strong_groebner_basis
from .matrix import (
    IntMatrix,
    Matrix,
    RatMatrix,
    bareiss_det,
    char_poly,
    companion_matrix,
    kronecker_square,
    kronecker_square_charpoly,
    poly_at_matrix,
    resultant,
    resultant_euclid,
    sylvester_matrix,
)
from .poly import (
    T,
    IntPoly,
    RatPoly,
    SquareFreeDecomposition,
    as_intpoly,
    as_ratpoly,
    format_poly,
    gcd_many,
    gcd_q,
    partial_sum,
    squarefree_factorization,
    substitute_power,
)

__all__ = [
    "T", "IntPoly", "RatPoly", "SquareFreeDecomposition", "Matrix", "IntMatrix", "RatMatrix",
    "as_intpoly", "as_ratpoly", "format_poly", "gcd_q", "gcd_many", "squarefree_factorization",
    "partial_sum", "substitute_power", "sylvester_matrix", "resultant", "resultant_euclid",
    "companion_matrix", "kronecker_square", "kronecker_square_charpoly", "char_poly",
    "poly_at_matrix", "bareiss_det", "ideal_constant", "strong_groebner_basis",
]
