"""Exact scalars, polynomials, rational functions and factorization."""

from .field import (FieldSpec, QQ, Quad, quad, to_scalar, format_scalar, parse_scalar,
                    real_part_floor_shift, scalar_arith, sqrt_in_field)
from .poly import Poly, RatFun, interpolate, poly_gcd, poly_lcm, squarefree_factorization
from .factor import FactorList, factorize, integer_roots, rational_roots, roots_in_field
from . import linalg

__all__ = [
    "FieldSpec", "QQ", "Quad", "quad", "to_scalar", "format_scalar", "parse_scalar",
    "real_part_floor_shift", "scalar_arith", "sqrt_in_field",
    "Poly", "RatFun", "interpolate", "poly_gcd", "poly_lcm", "squarefree_factorization",
    "FactorList", "factorize", "integer_roots", "rational_roots", "roots_in_field",
    "linalg",
]
