"""Exact arithmetic in the cyclotomic field Q(zeta_12).

Elements are stored on the power basis 1, z, z^2, z^3 where z is a primitive
12th root of unity, so z^4 = z^2 - 1 and z^6 = -1.  The field contains every
constant the symbolic layer needs: i = z^3, a primitive cube root of unity
zeta3 = z^4, and sqrt(3) = z + z^-1 = 2z - z^3.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction, "Cyc12"]

_ZERO4 = (Fraction(0), Fraction(0), Fraction(0), Fraction(0))


class Cyc12:
    """An element a + b*z + c*z^2 + d*z^3 of Q(zeta_12), z^4 = z^2 - 1."""

    __slots__ = ("co",)

    def __init__(self, a=0, b=0, c=0, d=0):
        self.co = (Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    @staticmethod
    def from_coeffs(co) -> "Cyc12":
        e = Cyc12.__new__(Cyc12)
        e.co = tuple(Fraction(x) for x in co)
        return e

    @staticmethod
    def coerce(x: Scalar) -> "Cyc12":
        if isinstance(x, Cyc12):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyc12(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into Q(zeta_12)")

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        o = Cyc12.coerce(other)
        return Cyc12.from_coeffs(tuple(x + y for x, y in zip(self.co, o.co)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc12.from_coeffs(tuple(-x for x in self.co))

    def __sub__(self, other):
        return self + (-Cyc12.coerce(other))

    def __rsub__(self, other):
        return Cyc12.coerce(other) + (-self)

    def __mul__(self, other):
        o = Cyc12.coerce(other)
        a0, a1, a2, a3 = self.co
        b0, b1, b2, b3 = o.co
        # raw product coefficients for z^0 .. z^6
        c = [
            a0 * b0,
            a0 * b1 + a1 * b0,
            a0 * b2 + a1 * b1 + a2 * b0,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            a1 * b3 + a2 * b2 + a3 * b1,
            a2 * b3 + a3 * b2,
            a3 * b3,
        ]
        # reduce with z^4 = z^2 - 1 (hence z^5 = z^3 - z, z^6 = -1)
        c[2] += c[4]
        c[0] -= c[4]
        c[3] += c[5]
        c[1] -= c[5]
        c[0] -= c[6]
        return Cyc12.from_coeffs(c[:4])

    __rmul__ = __mul__

    def inverse(self) -> "Cyc12":
        """Multiplicative inverse, via Gaussian elimination on the 4x4
        multiplication-by-self matrix."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_12)")
        basis = [Cyc12(1), Cyc12(0, 1), Cyc12(0, 0, 1), Cyc12(0, 0, 0, 1)]
        # columns: self * z^j
        m = [[(self * basis[j]).co[i] for j in range(4)] for i in range(4)]
        rhs = [Fraction(1), Fraction(0), Fraction(0), Fraction(0)]
        n = 4
        for col in range(n):
            piv = next(r for r in range(col, n) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
            inv = 1 / m[col][col]
            m[col] = [x * inv for x in m[col]]
            rhs[col] *= inv
            for r in range(n):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
                    rhs[r] -= f * rhs[col]
        return Cyc12.from_coeffs(rhs)

    def __truediv__(self, other):
        return self * Cyc12.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Cyc12.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyc12(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.co == _ZERO4

    def is_rational(self) -> bool:
        return self.co[1] == 0 and self.co[2] == 0 and self.co[3] == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.co[0]

    def __eq__(self, other):
        try:
            return self.co == Cyc12.coerce(other).co
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(("Cyc12", self.co))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        names = ("", "*z", "*z^2", "*z^3")
        parts = [f"{c}{n}" for c, n in zip(self.co, names) if c != 0]
        return " + ".join(parts) if parts else "0"


ZETA = Cyc12(0, 1)          # primitive 12th root of unity
I_UNIT = Cyc12(0, 0, 0, 1)  # i = z^3
ZETA3 = Cyc12(-1, 0, 1)     # primitive cube root, z^4 = z^2 - 1
SQRT3 = Cyc12(0, 2, 0, -1)  # z + z^-1 = 2z - z^3
SQRT_M3 = SQRT3 * I_UNIT    # sqrt(-3) = 2z^2 - 1


def zeta_power(k: int) -> Cyc12:
    """z^k for any integer k."""
    return ZETA ** (k % 12)
