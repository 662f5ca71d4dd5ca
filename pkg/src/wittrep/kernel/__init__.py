"""Exact arithmetic over Q(sqrt 19)[L] and exact linear algebra."""

from .scalar import (L, ONE, SQRT19, ZERO, QuadRat, Scalar, as_scalar,
                     format_scalar, normalize, parse_scalar)
from .linalg import (Definiteness, Echelon, Matrix, PolyEchelon, definiteness,
                     nullspace, poly_rank, rank, to_field)

__all__ = [
    "L", "ONE", "SQRT19", "ZERO", "QuadRat", "Scalar", "as_scalar", "format_scalar",
    "normalize", "parse_scalar", "Definiteness", "Echelon", "Matrix", "PolyEchelon",
    "definiteness", "nullspace", "poly_rank", "rank", "to_field",
]
