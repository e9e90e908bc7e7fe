"""Exact fields, sparse polynomials and exact linear algebra on sympy's polys layer."""

from .budget import Budget
from .field import (
    DEFAULT_PRIME,
    GF,
    QQ,
    SECOND_PRIME,
    Field,
    FieldElement,
    FieldError,
    field_name,
    is_prime,
    parse_field,
)
from .matrix import (
    Echelon,
    ExactMatrix,
    RankCrosscheck,
    SparseVector,
    echelonize,
    from_triplets,
    image_echelon,
    is_invertible,
    nonzeros,
    rank,
    rank_and_kernel,
    rank_crosscheck,
    sparse_kernel,
    sparse_matrix,
)
from .polynomial import (
    Monomial,
    Polynomial,
    change_field,
    from_terms,
    poly_mul,
    polynomial_ring,
    to_text,
    variables,
)

__all__ = [
    "Budget",
    "DEFAULT_PRIME",
    "Echelon",
    "ExactMatrix",
    "Field",
    "FieldElement",
    "FieldError",
    "GF",
    "Monomial",
    "Polynomial",
    "QQ",
    "RankCrosscheck",
    "SECOND_PRIME",
    "SparseVector",
    "change_field",
    "echelonize",
    "field_name",
    "from_terms",
    "from_triplets",
    "image_echelon",
    "is_invertible",
    "is_prime",
    "nonzeros",
    "parse_field",
    "poly_mul",
    "polynomial_ring",
    "rank",
    "rank_and_kernel",
    "rank_crosscheck",
    "sparse_kernel",
    "sparse_matrix",
    "to_text",
    "variables",
]
