"""Rational functions built on MPoly, with exact cancellation."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Union

from .cyc12 import Cyc12
from .mpoly import MPoly, ugcd, udivmod, utrim


class PoleError(ArithmeticError):
    """Raised when an evaluation hits a zero of the denominator."""


def _monomial_gcd(p: MPoly, q: MPoly):
    """Componentwise min exponent vector common to every term of p and q."""
    if p.is_zero() or q.is_zero():
        return None
    n = len(p.vars)
    g = [min(min(e[i] for e in p.terms), min(e[i] for e in q.terms)) for i in range(n)]
    if all(x == 0 for x in g):
        return None
    return tuple(g)


def _divide_monomial(p: MPoly, mono) -> MPoly:    return MPoly(p.vars, {tuple(a - b for a, b in zip(e, mono)): c for e, c in p.terms.items()})


class RatFunc:
    """num/den with gcd-cancelled, unit-normalised representation."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly = None, *, reduce: bool = True):
        if den is None:
            den = MPoly.const(num.vars, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.vars != den.vars:
            raise ValueError("variable mismatch")
        if reduce:
            num, den = _reduced(num, den)
        self.num = num
        self.den = den

    # -- constructors ----------------------------------------------------

    @staticmethod
    def const(vars, c) -> "RatFunc":
        return RatFunc(MPoly.const(vars, c))

    @staticmethod
    def var(vars, name) -> "RatFunc":
        return RatFunc(MPoly.var(vars, name))

    @staticmethod
    def of(x, vars=None) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, MPoly):
            return RatFunc(x)
        return RatFunc(MPoly.const(vars, x))

    @property
    def vars(self):
        return self.num.vars

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = RatFunc.of(other, self.vars)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-RatFunc.of(other, self.vars))

    def __rsub__(self, other):
        return RatFunc.of(other, self.vars) - self

    def __mul__(self, other):
        o = RatFunc.of(other, self.vars)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFunc.of(other, self.vars)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFunc.of(other, self.vars) / self

    def __pow__(self, k: int):
        if k < 0:
            return (RatFunc(self.den, self.num)) ** (-k)
        return RatFunc(self.num**k, self.den**k)

    def __eq__(self, other):
        try:
            o = RatFunc.of(other, self.vars)
        except TypeError:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_mpoly(self) -> MPoly:
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: denominator {self.den}")
        c = self.den.constant_value()
        inv = 1 / c if isinstance(c, Fraction) else c.inverse()
        return self.num.scale(inv)

    # -- substitution / evaluation -----------------------------------------

    def subs(self, values: Dict[str, "RatFunc"]) -> "RatFunc":
        vals = {k: RatFunc.of(v, self.vars) for k, v in values.items()}
        num = _subs_poly_ratfunc(self.num, vals)
        den = _subs_poly_ratfunc(self.den, vals)
        if den.is_zero():
            raise PoleError("pole at evaluation point")
        return num / den

    def evaluate(self, values: Dict[str, Union[int, Fraction, Cyc12]]):
        dv = self.den.evaluate(values)
        if not dv:
            raise PoleError("pole at evaluation point")
        nv = self.num.evaluate(values)
        if isinstance(dv, Cyc12) or isinstance(nv, Cyc12):
            return Cyc12.coerce(nv) * Cyc12.coerce(dv).inverse()
        return nv / dv

    def __repr__(self):
        if self.is_polynomial():
            return repr(self.num)
        return f"({self.num}) / ({self.den})"


def _subs_poly_ratfunc(p: MPoly, vals: Dict[str, RatFunc]) -> RatFunc:
    out = RatFunc.const(p.vars, 0)
    powcache: Dict[tuple, RatFunc] = {}

    def power(name, k):
        key = (name, k)
        if key not in powcache:
            powcache[key] = vals[name] ** k
        return powcache[key]

    for e, c in p.terms.items():
        rest = [0] * len(p.vars)
        term = RatFunc.const(p.vars, c)
        for i, k in enumerate(e):
            name = p.vars[i]
            if k and name in vals:
                term = term * power(name, k)
            else:
                rest[i] = k
        term = term * RatFunc(MPoly(p.vars, {tuple(rest): Fraction(1)}))
        out = out + term
    return out


def _reduced(num: MPoly, den: MPoly):
    if num.is_zero():
        return num, MPoly.const(num.vars, 1)
    # monomial content
    g = _monomial_gcd(num, den)
    if g is not None:
        num, den = _divide_monomial(num, g), _divide_monomial(den, g)
    if den.is_constant():
        c = den.constant_value()
        inv = 1 / c if isinstance(c, Fraction) else c.inverse()
        return num.scale(inv), MPoly.const(num.vars, 1)
    used = [v for v in num.vars if num.uses(v) or den.uses(v)]
    if len(used) == 1:
        v = used[0]
        a = num.to_scalar_coeffs(v)
        b = den.to_scalar_coeffs(v)
        g1 = ugcd(a, b)
        if len(g1) > 1:
            a, _ = udivmod(a, g1)
            b, _ = udivmod(b, g1)
        lead = b[-1]
        inv = 1 / lead if isinstance(lead, Fraction) else lead.inverse()
        a = utrim([c * inv for c in a])
        b = utrim([c * inv for c in b])
        num = MPoly(num.vars, {_unit_exp(num.vars, v, i): c for i, c in enumerate(a) if c})
        den = MPoly(num.vars, {_unit_exp(num.vars, v, i): c for i, c in enumerate(b) if c})
        return num, den
    if not num.has_cyc_coeffs() and not den.has_cyc_coeffs():
        from . import _sympybridge as sb

        return sb.cancel_pair(num, den)
    # parametric cyclotomic coefficients: only monomial cancellation is done
    return num, den


def _unit_exp(vars, name, k):
    i = vars.index(name)
    return tuple(k if j == i else 0 for j in range(len(vars)))


def ratfunc_eval(f: RatFunc, assignments: Dict[str, object]):
    """Exact substitution; scalar assignments evaluate fully, RatFunc
    assignments substitute symbolically."""
    if all(not isinstance(v, (RatFunc, MPoly)) for v in assignments.values()):
        names = set(assignments)
        if all(v in names or not (f.num.uses(v) or f.den.uses(v)) for v in f.vars):
            return f.evaluate(assignments)
    return f.subs(assignments)
