"""Exact integer matrices: Smith normal form, Hermite form, kernels, F2 rank.

Sizes in this project stay below ~30x30, so the algorithms are the naive
pivot-with-gcd reductions; no modular tricks are needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple


class IntMatrix:
    """A dense matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "a")

    def __init__(self, entries: Sequence[Sequence[int]]):
        self.a = [[int(x) for x in row] for row in entries]
        self.rows = len(self.a)
        self.cols = len(self.a[0]) if self.a else 0
        if any(len(r) != self.cols for r in self.a):
            raise ValueError("ragged rows")

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(r: int, c: int) -> "IntMatrix":
        m = IntMatrix.__new__(IntMatrix)
        m.a = [[0] * c for _ in range(r)]
        m.rows, m.cols = r, c
        return m

    def copy(self) -> "IntMatrix":
        return IntMatrix(self.a)

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self.a[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __getitem__(self, ij):
        i, j = ij
        return self.a[i][j]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.a == other.a

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        ot = other.transpose().a
        return IntMatrix(
            [[sum(x * y for x, y in zip(row, col)) for col in ot] for row in self.a]
        )

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.a[i][j] == self.a[j][i] for i in range(self.rows) for j in range(i)
        )

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [row[:] for row in self.a]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                piv = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
                if piv is None:
                    return 0
                m[k], m[piv] = m[piv], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def __repr__(self):
        return f"IntMatrix({self.a!r})"


def smith_normal_form(m: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (S, U, V) with U*m*V = S, S diagonal with d1 | d2 | ...,
    U, V unimodular and the diagonal nonnegative."""
    a = [row[:] for row in m.a]
    rows, cols = m.rows, m.cols
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def addmul_row(dst, src, f):
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def addmul_col(dst, src, f):
        for r in a:
            r[dst] += f * r[src]
        for r in v:
            r[dst] += f * r[src]

    def diagonalize():
        t = 0
        while t < min(rows, cols):
            piv = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] != 0 and (
                        piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])
                    ):
                        piv = (i, j)
            if piv is None:
                break
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
            while True:
                dirty = False
                for i in range(t + 1, rows):
                    if a[i][t] != 0:
                        q = a[i][t] // a[t][t]
                        addmul_row(i, t, -q)
                        if a[i][t] != 0:
                            swap_rows(t, i)
                            dirty = True
                for j in range(t + 1, cols):
                    if a[t][j] != 0:
                        q = a[t][j] // a[t][t]
                        addmul_col(j, t, -q)
                        if a[t][j] != 0:
                            swap_cols(t, j)
                            dirty = True
                if not dirty:
                    break
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
                u[t] = [-x for x in u[t]]
            t += 1
        return t

    r = diagonalize()
    # enforce the divisibility chain: on violation, fold the next diagonal
    # entry into the previous column and re-reduce
    while True:
        bad = next(
            (i for i in range(r - 1) if a[i][i] != 0 and a[i + 1][i + 1] % a[i][i] != 0),
            None,
        )
        if bad is None:
            break
        addmul_col(bad, bad + 1, 1)
        r = diagonalize()
    return IntMatrix(a), IntMatrix(u), IntMatrix(v)


def f2_rank(m: IntMatrix) -> int:
    """Rank of m over F2 by Gaussian elimination on bit rows."""
    rows = []
    for r in m.a:
        bits = 0
        for j, x in enumerate(r):
            if x & 1:
                bits |= 1 << j
        rows.append(bits)
    rank = 0
    for col in range(m.cols):
        mask = 1 << col
        piv = next((i for i in range(rank, len(rows)) if rows[i] & mask), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & mask:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


def hnf_rows(m: IntMatrix) -> IntMatrix:
    """Row-style Hermite normal form (zero rows dropped): a canonical basis
    of the row span of m over Z."""
    a = [row[:] for row in m.a]
    rows, cols = len(a), m.cols
    pivot_row = 0
    for col in range(cols):
        if pivot_row == rows:
            break
        piv = None
        for i in range(pivot_row, rows):
            if a[i][col] != 0 and (piv is None or abs(a[i][col]) < abs(a[piv][col])):
                piv = i
        if piv is None:
            continue
        a[pivot_row], a[piv] = a[piv], a[pivot_row]
        while True:
            done = True
            for i in range(pivot_row + 1, rows):
                if a[i][col] != 0:
                    q = a[i][col] // a[pivot_row][col]
                    a[i] = [x - q * y for x, y in zip(a[i], a[pivot_row])]
                    if a[i][col] != 0:
                        a[pivot_row], a[i] = a[i], a[pivot_row]
                        done = False
            if done:
                break
        if a[pivot_row][col] < 0:
            a[pivot_row] = [-x for x in a[pivot_row]]
        for i in range(pivot_row):
            q = a[i][col] // a[pivot_row][col]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[pivot_row])]
        pivot_row += 1
    return IntMatrix([r for r in a[:pivot_row] if any(r)])


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Basis of the saturated integer kernel {x : m x = 0} (as rows)."""
    s, u, v = smith_normal_form(m)
    r = sum(1 for i in range(min(s.rows, s.cols)) if s.a[i][i] != 0)
    cols = [[v.a[i][j] for i in range(m.cols)] for j in range(r, m.cols)]
    return IntMatrix(cols) if cols else IntMatrix.zeros(0, m.cols)


def rational_solve(m: List[List[Fraction]], rhs: List[Fraction]):
    """Solve m x = rhs over Q; returns None if inconsistent."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    aug = [list(map(Fraction, m[i])) + [Fraction(rhs[i])] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = aug[i][cols]
    return x


def rational_matrix_rank(m: List[List[Fraction]]) -> int:
    rows = [list(map(Fraction, r)) for r in m]
    cols = len(rows[0]) if rows else 0
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][c]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank
