"""Square-part extraction: write p = c * s^2 * r with r squarefree.

The residue r collects the odd-multiplicity factors that depend on the main
variable; a polynomial is a square up to a unit of the coefficient field
exactly when r == 1.  Univariate input (over Q or Q(zeta_12)) runs through
Yun's algorithm; input with parameters runs through sympy factorisation
over Q.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .mpoly import MPoly, udivmod, umul, uyun, umonic
from .ratfunc import RatFunc


class SquarePart(NamedTuple):
    s: MPoly       # the square part
    r: MPoly       # squarefree residue in the main variable (1 for squares)
    const: RatFunc  # unit of the coefficient field, so p = const * s^2 * r


def poly_square_part(p: MPoly, main_var: str) -> SquarePart:
    if p.is_zero():
        raise ValueError("zero input")
    others = [v for v in p.vars if v != main_var and p.uses(v)]
    if not others:
        return _square_part_univariate(p, main_var)
    if p.has_cyc_coeffs():
        raise NotImplementedError(
            "square-part extraction with parametric cyclotomic coefficients"
        )
    return _square_part_multivariate(p, main_var)


def _square_part_univariate(p: MPoly, main_var: str) -> SquarePart:
    coeffs = p.to_scalar_coeffs(main_var)
    lead = coeffs[-1]
    decomp = uyun(coeffs)
    s = [Fraction(1)]
    r = [Fraction(1)]
    for f, m in decomp:
        for _ in range(m // 2):
            s = umul(s, f)
        if m % 2:
            r = umul(r, f)
    sq = umul(umul(s, s), r)
    c, rem = udivmod(coeffs, sq)
    assert not rem and len(c) == 1, "square-part reconstruction failed"

    def back(u):
        return MPoly.from_coeffs_in(p.vars, main_var, [MPoly.const(p.vars, x) for x in u])

    return SquarePart(back(s), back(r), RatFunc.const(p.vars, c[0]))


def _square_part_multivariate(p: MPoly, main_var: str) -> SquarePart:
    from . import _sympybridge as sb

    const, facs = sb.factor_list(p)
    s = MPoly.const(p.vars, 1)
    r = MPoly.const(p.vars, 1)
    cpoly = MPoly.const(p.vars, const)
    for f, m in facs:
        if f.uses(main_var):
            s = s * f ** (m // 2)
            if m % 2:
                r = r * f
        else:
            cpoly = cpoly * f**m
    return SquarePart(s, r, RatFunc(cpoly))


def is_square_up_to_unit(p: MPoly, main_var: str) -> bool:
    """True if p = c * s(main_var)^2 for a unit c of the coefficient field
    (any element not involving the main variable)."""
    return poly_square_part(p, main_var).r.degree(main_var) <= 0
