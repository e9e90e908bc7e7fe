"""Groebner bases, normal forms and Hilbert data of A = S/I."""

from .buchberger import GroebnerBasis, buchberger, is_groebner, is_reduced, normal_form, reduce, s_polynomial
from .grading import FineGrading, fine_grading
from .idealio import IdealParseError, IdealText, format_ideal, load_ideal, parse_ideal
from .order import MonomialOrder
from .quotient import (
    HilbertNumerator,
    QMaxTooSmallError,
    QuotientAlgebra,
    h_vector,
    hilbert_numerator,
    krull_dim,
    numerator_degree_bound,
    standard_monomials,
)

__all__ = [
    "FineGrading",
    "GroebnerBasis",
    "HilbertNumerator",
    "IdealParseError",
    "IdealText",
    "MonomialOrder",
    "QMaxTooSmallError",
    "QuotientAlgebra",
    "buchberger",
    "fine_grading",
    "format_ideal",
    "h_vector",
    "hilbert_numerator",
    "is_groebner",
    "is_reduced",
    "krull_dim",
    "load_ideal",
    "normal_form",
    "numerator_degree_bound",
    "parse_ideal",
    "reduce",
    "s_polynomial",
    "standard_monomials",
]
