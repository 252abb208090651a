"""Exact algebra over Q: sparse polynomials, GCDs, polynomial matrices."""
from .gcd import gcd_list, poly_gcd
from .linalg import kernel_basis, rank as rational_rank, rref
from .poly import (
    MultiPoly,
    NotDivisible,
    ParseError,
    PolyError,
    PolyRing,
    RingMismatch,
    UnassignedVariable,
    as_rational,
    format_rational,
    poly_arith,
)
from .polymatrix import (
    NotSkewSymmetric,
    PolyMatrix,
    det_bareiss,
    matrix_rank_ff,
    pfaffian,
    principal_pfaffians,
)

__all__ = [
    "MultiPoly", "PolyRing", "PolyError", "RingMismatch", "UnassignedVariable",
    "NotDivisible", "ParseError", "NotSkewSymmetric", "as_rational", "format_rational",
    "poly_arith", "poly_gcd", "gcd_list", "PolyMatrix", "matrix_rank_ff", "det_bareiss",
    "pfaffian", "principal_pfaffians", "kernel_basis", "rref", "rational_rank",
]
