"""Conversions between MPoly (rational coefficients) and sympy expressions.

sympy supplies the two operations that are painful to hand-roll for
multivariate input: gcd cancellation and full factorisation over Q.  Nothing
with cyclotomic coefficients crosses this bridge.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

import sympy as sp

from .mpoly import MPoly

_symcache = {}


def _sym(name: str):
    if name not in _symcache:
        _symcache[name] = sp.Symbol(name)
    return _symcache[name]


def to_sympy(p: MPoly):
    if p.has_cyc_coeffs():
        raise ValueError("cyclotomic coefficients cannot cross the sympy bridge")
    syms = [_sym(v) for v in p.vars]
    terms = []
    for e, c in p.terms.items():
        mono = sp.Integer(1)
        for s, k in zip(syms, e):
            if k:
                mono *= s**k
        terms.append(sp.Rational(c.numerator, c.denominator) * mono)
    return sp.Add(*terms) if terms else sp.Integer(0)


def from_sympy(expr, vars) -> MPoly:
    syms = [_sym(v) for v in vars]
    expr = sp.expand(expr)
    if expr == 0:
        return MPoly.zero(vars)
    poly = sp.Poly(expr, *syms, domain="QQ")
    terms = {}
    for e, c in poly.terms():
        terms[tuple(int(x) for x in e)] = Fraction(c.p, c.q)
    return MPoly(vars, terms)


def cancel_pair(num: MPoly, den: MPoly) -> Tuple[MPoly, MPoly]:
    n, d = to_sympy(num), to_sympy(den)
    c = sp.cancel(n / d)
    nn, dd = sp.fraction(sp.together(c))
    return from_sympy(nn, num.vars), from_sympy(dd, num.vars)


def factor_list(p: MPoly) -> Tuple[Fraction, List[Tuple[MPoly, int]]]:
    """Irreducible factorisation over Q: p = const * prod f_i^m_i with the
    f_i primitive integer polynomials."""
    c, facs = sp.factor_list(to_sympy(p))
    const = Fraction(sp.Rational(c).p, sp.Rational(c).q)
    out = []
    for f, m in facs:
        out.append((from_sympy(f, p.vars), int(m)))
    return const, out
