"""Exact arithmetic: rationals, bivariate polynomials in a and z, and their fraction field."""

from fractions import Fraction as BigRational

from .gcd import poly_divexact, poly_gcd
from .poly import BiPoly
from .products import double_factorial, falling_factorial, range_product
from .ratfunc import PoleError, RatFunc, ratfunc_eval, ratfunc_reduce

A = RatFunc.var("a")
Z = RatFunc.var("z")

__all__ = [
    "A",
    "Z",
    "BigRational",
    "BiPoly",
    "PoleError",
    "RatFunc",
    "double_factorial",
    "falling_factorial",
    "poly_divexact",
    "poly_gcd",
    "range_product",
    "ratfunc_eval",
    "ratfunc_reduce",
]
