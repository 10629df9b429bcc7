"""Sparse multivariate polynomials over Q or Q(zeta_12).

Coefficients are `fractions.Fraction` or `Cyc12` scalars; exponent vectors are
tuples aligned with a fixed variable list.  Terms iterate in graded
lexicographic order.  Degrees in this project stay small (<= 24 in the main
variable), so everything is plain dictionary arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from .cyc12 import Cyc12

Coeff = Union[Fraction, Cyc12]


def _is_zero(c: Coeff) -> bool:
    return not c


def _coerce_coeff(c) -> Coeff:
    if isinstance(c, (Fraction, Cyc12)):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class MPoly:
    """A polynomial in an ordered list of variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Dict[Tuple[int, ...], Coeff]):
        self.vars = tuple(vars)
        self.terms = {e: c for e, c in terms.items() if not _is_zero(c)}

    # -- constructors ----------------------------------------------------

    @staticmethod
    def const(vars: Sequence[str], c) -> "MPoly":
        c = _coerce_coeff(c)
        zero = (0,) * len(vars)
        return MPoly(vars, {zero: c})

    @staticmethod
    def var(vars: Sequence[str], name: str) -> "MPoly":
        vars = tuple(vars)
        i = vars.index(name)
        e = tuple(1 if j == i else 0 for j in range(len(vars)))
        return MPoly(vars, {e: Fraction(1)})

    @staticmethod
    def zero(vars: Sequence[str]) -> "MPoly":
        return MPoly(vars, {})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(x == 0 for x in e) for e in self.terms)

    def constant_value(self) -> Coeff:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def has_cyc_coeffs(self) -> bool:
        return any(isinstance(c, Cyc12) for c in self.terms.values())

    def degree(self, name: str) -> int:
        if self.is_zero():
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def total_degree(self) -> int:
        if self.is_zero():
            return -1
        return max(sum(e) for e in self.terms)

    def uses(self, name: str) -> bool:
        return self.degree(name) > 0

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), ec[0]), reverse=True)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "MPoly"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        other = self._coerce_operand(other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if _is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return MPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce_operand(other))

    def __rsub__(self, other):
        return self._coerce_operand(other) - self

    def __mul__(self, other):
        other = self._coerce_operand(other)
        self._check(other)
        out: Dict[Tuple[int, ...], Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if _is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return MPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = MPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _coerce_operand(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        return MPoly.const(self.vars, other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyc12)):
            other = MPoly.const(self.vars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and (self - other).is_zero()

    def scale(self, c) -> "MPoly":
        c = _coerce_coeff(c)
        if _is_zero(c):
            return MPoly.zero(self.vars)
        return MPoly(self.vars, {e: cc * c for e, cc in self.terms.items()})

    # -- calculus & substitution -------------------------------------------

    def diff(self, name: str) -> "MPoly":
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = tuple(x - 1 if j == i else x for j, x in enumerate(e))
            s = out.get(e2, Fraction(0)) + c * e[i]
            if _is_zero(s):
                out.pop(e2, None)
            else:
                out[e2] = s
        return MPoly(self.vars, out)

    def subs(self, values: Dict[str, "MPoly"]) -> "MPoly":
        """Substitute polynomials (or scalars) for variables."""
        vals = {}
        for name, v in values.items():
            if not isinstance(v, MPoly):
                v = MPoly.const(self.vars, v)
            vals[self.vars.index(name)] = v
        out = MPoly.zero(self.vars)
        powcache: Dict[Tuple[int, int], MPoly] = {}

        def power(i, k):
            key = (i, k)
            if key not in powcache:
                powcache[key] = vals[i] ** k
            return powcache[key]

        for e, c in self.terms.items():
            mono_e = tuple(0 if i in vals else x for i, x in enumerate(e))
            term = MPoly(self.vars, {mono_e: c})
            for i, k in enumerate(e):
                if i in vals and k:
                    term = term * power(i, k)
            out = out + term
        return out

    def evaluate(self, values: Dict[str, Coeff]) -> Coeff:
        """Full evaluation at scalar values (every used variable assigned)."""
        total: Coeff = Fraction(0)
        powcache: Dict[Tuple[str, int], Coeff] = {}
        idx = {name: self.vars.index(name) for name in values}
        for e, c in self.terms.items():
            term = c
            for name, i in idx.items():
                k = e[i]
                if k:
                    key = (name, k)
                    if key not in powcache:
                        powcache[key] = _coerce_coeff(values[name]) ** k
                    term = term * powcache[key]
            for i, k in enumerate(e):
                if k and self.vars[i] not in values:
                    raise ValueError(f"unassigned variable {self.vars[i]}")
            total = total + term
        return total

    # -- univariate views ----------------------------------------------------

    def coeffs_in(self, name: str) -> List["MPoly"]:
        """Dense coefficient list [c0, c1, ...] of self as a polynomial in
        `name`, coefficients being polynomials in the remaining variables."""
        i = self.vars.index(name)
        d = self.degree(name)
        out = [MPoly.zero(self.vars) for _ in range(max(d + 1, 1))]
        for e, c in self.terms.items():
            k = e[i]
            e2 = tuple(0 if j == i else x for j, x in enumerate(e))
            out[k] = out[k] + MPoly(self.vars, {e2: c})
        return out

    @staticmethod
    def from_coeffs_in(vars: Sequence[str], name: str, coeffs: Sequence["MPoly"]) -> "MPoly":
        vars = tuple(vars)
        x = MPoly.var(vars, name)
        out = MPoly.zero(vars)
        for k, c in enumerate(coeffs):
            if isinstance(c, MPoly):
                out = out + c * x**k
            else:
                out = out + MPoly.const(vars, c) * x**k
        return out

    def to_scalar_coeffs(self, name: str) -> List[Coeff]:
        """Dense scalar coefficient list; requires all other variables unused."""
        for v in self.vars:
            if v != name and self.uses(v):
                raise ValueError(f"polynomial is not univariate in {name}")
        i = self.vars.index(name)
        d = max(self.degree(name), 0)
        out: List[Coeff] = [Fraction(0)] * (d + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out

    def leading_coeff(self, name: str) -> "MPoly":
        return self.coeffs_in(name)[-1]

    def with_vars(self, newvars: Sequence[str]) -> "MPoly":
        """Reinterpret over a different variable tuple (must cover used vars)."""
        newvars = tuple(newvars)
        pos = {}
        for i, v in enumerate(self.vars):
            if v in newvars:
                pos[i] = newvars.index(v)
            elif self.uses(v):
                raise ValueError(f"variable {v} in use but absent from {newvars}")
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * len(newvars)
            for i, k in enumerate(e):
                if k:
                    e2[pos[i]] = k
            out[tuple(e2)] = out.get(tuple(e2), Fraction(0)) + c
        return MPoly(newvars, out)

    # -- printing ------------------------------------------------------------

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k
            )
            if mono:
                parts.append(f"({c})*{mono}" if not _is_one(c) else mono)
            else:
                parts.append(f"({c})")
        return " + ".join(parts)


def _is_one(c: Coeff) -> bool:
    try:
        return c == 1
    except TypeError:
        return False


# -- dense univariate helpers over a coefficient field ------------------------
# Coefficient lists are little-endian ([c0, c1, ...]); scalars are Fraction or
# Cyc12, both of which form fields.


def utrim(p: List[Coeff]) -> List[Coeff]:
    while p and _is_zero(p[-1]):
        p.pop()
    return p


def udeg(p: List[Coeff]) -> int:
    return len(p) - 1


def uadd(p, q):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else Fraction(0)
        b = q[i] if i < len(q) else Fraction(0)
        out.append(a + b)
    return utrim(out)


def uneg(p):
    return [-c for c in p]


def umul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if _is_zero(a):
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return utrim(out)

def uscale(p, c):
    return utrim([x * c for x in p])


def udivmod(p, q):
    """Polynomial division over the coefficient field."""
    p = utrim(list(p))
    q = utrim(list(q))
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    rem = list(p)
    dq = len(q) - 1
    lead = q[-1]
    while len(rem) - 1 >= dq and rem:
        k = len(rem) - 1 - dq
        f = rem[-1] / lead
        quot[k] = f
        for i in range(len(q)):
            rem[k + i] = rem[k + i] - f * q[i]
        utrim(rem)
        if not rem:
            break
    return utrim(quot), rem


def umonic(p):
    p = utrim(list(p))
    if not p:
        return p
    inv = 1 / p[-1] if isinstance(p[-1], Fraction) else p[-1].inverse()
    return [c * inv for c in p]


def ugcd(p, q):
    """Monic gcd over the coefficient field (Euclid)."""
    a, b = utrim(list(p)), utrim(list(q))
    while b:
        _, r = udivmod(a, b)
        a, b = b, r
    return umonic(a)


def uderiv(p):
    return utrim([p[i] * i for i in range(1, len(p))])


def uyun(p) -> List[Tuple[List[Coeff], int]]:
    """Squarefree decomposition (Yun): p = lc * prod f_i^i with f_i monic,
    squarefree, pairwise coprime.  Characteristic zero."""
    p = umonic(p)
    if udeg(p) < 1:
        return []
    g = ugcd(p, uderiv(p))
    if udeg(g) == 0:
        return [(p, 1)]
    out = []
    w, _ = udivmod(p, g)
    y, _ = udivmod(uderiv(p), g)
    z = uadd(y, uneg(uderiv(w)))
    i = 1
    while udeg(w) > 0:
        f = ugcd(w, z)
        if udeg(f) > 0:
            out.append((f, i))
        w, _ = udivmod(w, f)
        y, _ = udivmod(z, f)
        z = uadd(y, uneg(uderiv(w)))
        i += 1
    return out
