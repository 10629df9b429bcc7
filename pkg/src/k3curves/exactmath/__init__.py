"""Exact arithmetic substrate: rationals, Q(zeta_12), polynomials, rational
functions, integer matrix normal forms and F2 linear algebra.

`Rational` is the standard library Fraction; everything downstream builds on
it so no floating point enters any computation.
"""

from fractions import Fraction as Rational

from .cyc12 import I_UNIT, SQRT3, SQRT_M3, ZETA, ZETA3, Cyc12, zeta_power
from .intmatrix import (
    IntMatrix,
    f2_rank,
    hnf_rows,
    kernel_basis,
    rational_matrix_rank,
    rational_solve,
    smith_normal_form,
)
from .mpoly import MPoly
from .parser import ParseError, parse_equation, parse_polynomial, parse_ratfunc
from .ratfunc import PoleError, RatFunc, ratfunc_eval
from .squarefree import SquarePart, is_square_up_to_unit, poly_square_part

__all__ = [
    "Rational",
    "Cyc12",
    "ZETA",
    "ZETA3",
    "I_UNIT",
    "SQRT3",
    "SQRT_M3",
    "zeta_power",
    "IntMatrix",
    "smith_normal_form",
    "f2_rank",
    "hnf_rows",
    "kernel_basis",
    "rational_solve",
    "rational_matrix_rank",
    "MPoly",
    "RatFunc",
    "PoleError",
    "ratfunc_eval",
    "ParseError",
    "parse_ratfunc",
    "parse_polynomial",
    "parse_equation",
    "SquarePart",
    "poly_square_part",
    "is_square_up_to_unit",
]
