"""Exact arithmetic kernel: rationals, one quadratic extension, sparse polynomials,
rational functions and elimination."""

from .elim import (
    bareiss_det,
    content_in,
    discriminant,
    poly_gcd,
    poly_lcm,
    poly_sqrt,
    prem,
    quadratic_roots,
    quartic_square_root,
    reduce_mod,
    resultant,
    sqrt_by_leading_terms,
    sylvester_matrix,
)
from . import upoly
from .poly import MultiPoly, parse_poly, variables
from .ratfunc import RatFunc, compose
from .scalars import (
    QuadExtScalar,
    Rational,
    as_rational,
    conjugate,
    parse_rational,
    rational_sqrt,
    rational_str,
    scalar_from_json,
    scalar_json,
    squarefree_part,
    to_mp,
)

__all__ = [
    "MultiPoly", "RatFunc", "upoly", "QuadExtScalar", "Rational",
    "as_rational", "bareiss_det", "compose", "conjugate", "content_in", "discriminant",
    "parse_poly", "parse_rational", "poly_gcd", "poly_lcm", "poly_sqrt", "prem",
    "quadratic_roots", "quartic_square_root", "rational_sqrt", "rational_str", "reduce_mod",
    "resultant", "scalar_from_json", "scalar_json", "sqrt_by_leading_terms",
    "squarefree_part", "sylvester_matrix", "to_mp", "variables",
]
