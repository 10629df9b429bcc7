"""Representability of integers by positive-definite quadratic forms.

The engine is an exact Fincke-Pohst-style recursion on the Lagrange
(completed-square) decomposition of the Gram matrix.  All bounds are computed
with integer arithmetic after clearing denominators once, so enumeration is
complete: a value reported as an exception up to B really is not represented
below B.

Forms are integer-valued on Z^n (integral diagonal, half-integral
off-diagonal).  Negative-definite lattice Grams are flipped to positive
definite before use; reports say so.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from .exactmath import IntMatrix

# the 29 critical integers of the Bhargava-Hanke universality criterion: an
# integer-valued positive form representing all of these represents every
# positive integer (list as published with the proof of the 290 theorem)
CRITICAL_290 = (
    1, 2, 3, 5, 6, 7, 10, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30, 31,
    34, 35, 37, 42, 58, 93, 110, 145, 203, 290,
)

_BALL_VOLUME = {1: 2.0, 2: 3.15, 3: 4.19, 4: 4.94, 5: 5.27, 6: 5.17, 7: 4.73, 8: 4.06}


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class FormError(ValueError):
    pass


def _centered_range(b: int, r: int, ymax: int) -> Iterator[int]:
    """All y with y = b (mod r) and |y| <= ymax, nearest zero first."""
    b = b % r
    kmin = -((ymax + b) // r)
    kmax = (ymax - b) // r
    if kmin > kmax:
        return
    q, rem = divmod(-b, r)
    k0 = q if 2 * rem <= r else q + 1
    k0 = min(max(k0, kmin), kmax)
    yield b + k0 * r
    step = 1
    while True:
        hi = k0 + step
        lo = k0 - step
        done = True
        if hi <= kmax:
            yield b + hi * r
            done = False
        if lo >= kmin:
            yield b + lo * r
            done = False
        if done:
            return
        step += 1


class PosDefForm:
    """Positive-definite integer-valued quadratic form Q(x) = x^T G x."""

    def __init__(self, gram: Sequence[Sequence], *, flipped: bool = False):
        if isinstance(gram, IntMatrix):
            gram = gram.a
        self.gram = [[Fraction(x) for x in row] for row in gram]
        self.rank = len(self.gram)
        self.flipped_from_negative = flipped
        if any(len(r) != self.rank for r in self.gram):
            raise FormError("gram matrix must be square")
        for i in range(self.rank):
            for j in range(self.rank):
                if self.gram[i][j] != self.gram[j][i]:
                    raise FormError("gram matrix must be symmetric")
        for i in range(self.rank):
            if self.gram[i][i].denominator != 1:
                raise FormError("diagonal entries must be integers")
            for j in range(i):
                if (2 * self.gram[i][j]).denominator != 1:
                    raise FormError("off-diagonal entries must be half-integral")
        self._lagrange()  # also certifies positive definiteness

    @staticmethod
    def from_lattice_gram(gram: Sequence[Sequence]) -> "PosDefForm":
        """Build from a definite lattice Gram, flipping a negative-definite
        one to its positive counterpart."""
        g = [[Fraction(x) for x in row] for row in gram]
        if g and g[0][0] < 0:
            return PosDefForm([[-x for x in row] for row in g], flipped=True)
        return PosDefForm(g)

    def value(self, x: Sequence[int]) -> int:
        tot = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                row = self.gram[i]
                tot += xi * sum(row[j] * x[j] for j in range(self.rank) if x[j])
        assert tot.denominator == 1, "form is not integer-valued at this vector"
        return int(tot)

    def determinant(self) -> Fraction:
        out = Fraction(1)
        for q in self._q:
            out *= q
        return out

    # -- Lagrange decomposition and integer scaling ------------------------

    def _lagrange(self):
        n = self.rank
        g = [row[:] for row in self.gram]
        q = [Fraction(0)] * n
        c = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            q[i] = g[i][i]
            if q[i] <= 0:
                raise FormError("form is not positive definite")
            for j in range(i + 1, n):
                c[i][j] = g[i][j] / q[i]
            for j in range(i + 1, n):
                for k in range(j, n):
                    g[j][k] -= q[i] * c[i][j] * c[i][k]
                    g[k][j] = g[j][k]
        self._q = q
        self._c = c
        # integer scaling: with y_i = R_i x_i + cn_i (cn_i the accumulated
        # center), L * Q(x) = sum_i W_i y_i^2 holds in integers
        r = [1] * n
        for i in range(n):
            for j in range(i + 1, n):
                r[i] = _lcm(r[i], c[i][j].denominator)
        lscale = 1
        for i in range(n):
            lscale = _lcm(lscale, (q[i].denominator * r[i] * r[i]))
        w = []
        for i in range(n):
            wi = q[i] * lscale / (r[i] * r[i])
            assert wi.denominator == 1
            w.append(int(wi))
        self._R = r
        self._L = lscale
        self._W = w
        self._CI = [
            [int(c[i][j] * r[i]) if j > i else 0 for j in range(n)] for i in range(n)
        ]

    # -- complete enumeration up to a bound ---------------------------------

    def short_vectors_upto(self, bound: int) -> List[Tuple[Tuple[int, ...], int]]:
        """All x with 0 < Q(x) <= bound, complete, sorted by (value, x)."""
        if bound < 0:
            raise FormError("bound must be >= 0")
        n = self.rank
        out: List[Tuple[Tuple[int, ...], int]] = []
        if bound == 0 or n == 0:
            return out
        lscale, w, r, ci = self._L, self._W, self._R, self._CI
        budget0 = lscale * bound
        xs = [0] * n

        def rec(i: int, budget: int, cn: List[int], used: int):
            wi, ri = w[i], r[i]
            ymax = isqrt(budget // wi)
            if i == 0:
                for y in _centered_range(cn[0], ri, ymax):
                    tot = used + wi * y * y
                    if tot == 0:
                        continue
                    if tot % lscale == 0:
                        xs[0] = (y - cn[0]) // ri
                        out.append((tuple(xs), tot // lscale))
                return
            for y in _centered_range(cn[i], ri, ymax):
                cost = wi * y * y
                xi = (y - cn[i]) // ri
                xs[i] = xi
                cn2 = [cn[j] + ci[j][i] * xi for j in range(i)]
                rec(i - 1, budget - cost, cn2, used + cost)
            xs[i] = 0

        rec(n - 1, budget0, [0] * n, 0)
        out.sort(key=lambda vx: (vx[1], vx[0]))
        return out

    # -- single-value witness search -----------------------------------------

    def representation(self, n: int) -> Optional[Tuple[int, ...]]:
        """A vector x with Q(x) = n, or None (certified by exhaustion).

        Interior levels run center-out over exact integer ranges; the last
        level solves W0*y^2 = remainder directly, so a search visits one
        arithmetic check per explored prefix."""
        if n <= 0:
            raise FormError("target must be positive")
        rank = self.rank
        if rank == 0:
            return None
        lscale, w, r, ci = self._L, self._W, self._R, self._CI
        w0, r0 = w[0], r[0]
        xs = [0] * rank

        def solve_leaf(budget: int, cn0: int) -> bool:
            if budget % w0:
                return False
            sq = budget // w0
            y = isqrt(sq)
            if y * y != sq:
                return False
            for cand in (y, -y) if y else (0,):
                if (cand - cn0) % r0 == 0:
                    xs[0] = (cand - cn0) // r0
                    return True
            return False

        if rank == 1:
            return tuple(xs) if solve_leaf(lscale * n, 0) else None

        def rec(i: int, budget: int, cn: List[int]) -> bool:
            wi, ri = w[i], r[i]
            ymax = isqrt(budget // wi)
            if i == 1:
                for y in _centered_range(cn[1], ri, ymax):
                    xi = (y - cn[1]) // ri
                    xs[1] = xi
                    if solve_leaf(budget - wi * y * y, cn[0] + ci[0][1] * xi):
                        return True
                return False
            for y in _centered_range(cn[i], ri, ymax):
                xi = (y - cn[i]) // ri
                xs[i] = xi
                cn2 = [cn[j] + ci[j][i] * xi for j in range(i)]
                if rec(i - 1, budget - wi * y * y, cn2):
                    return True
            return False

        if rec(rank - 1, lscale * n, [0] * rank):
            assert self.value(xs) == n
            return tuple(xs)
        return None

    def witnesses_for(self, targets: Set[int]) -> Dict[int, Tuple[int, ...]]:
        out = {}
        for n in sorted(targets):
            x = self.representation(n)
            if x is not None:
                out[n] = x
        return out

    # -- congruence data ------------------------------------------------------

    def doubled_gram_int(self) -> List[List[int]]:
        return [[int(2 * x) for x in row] for row in self.gram]

    def residues(self, modulus: int) -> Set[int]:
        return form_residues(self.gram, modulus)

    def blocks(self) -> List[List[int]]:
        """Connected components of the Gram support graph (orthogonal block
        decomposition in the given basis)."""
        n = self.rank
        seen = [False] * n
        comps = []
        for s in range(n):
            if seen[s]:
                continue
            comp, stack = [], [s]
            seen[s] = True
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if not seen[j] and self.gram[i][j] != 0:
                        seen[j] = True
                        stack.append(j)
            comps.append(sorted(comp))
        return comps

    def subform(self, idx: Sequence[int]) -> "PosDefForm":
        return PosDefForm([[self.gram[i][j] for j in idx] for i in idx])

    def __repr__(self):
        return f"PosDefForm(rank={self.rank}, gram={self.gram})"


def form_residues(gram: Sequence[Sequence], modulus: int) -> Set[int]:
    """The set {Q(x) mod modulus : x in (Z/modulus)^n}, computed exhaustively.
    Works for any symmetric integer-valued Gram (definite or not)."""
    g2 = [[int(2 * Fraction(x)) for x in row] for row in gram]
    n = len(g2)
    m = modulus
    out: Set[int] = set()
    vec = [0] * n

    def rec(i: int):
        if i == n:
            tot = 0
            for a in range(n):
                if vec[a]:
                    row = g2[a]
                    tot += vec[a] * sum(row[b] * vec[b] for b in range(n) if vec[b])
            out.add((tot // 2) % m)
            return
        for v in range(m):
            vec[i] = v
            rec(i + 1)
        vec[i] = 0

    if m**n > 5_000_000:
        raise FormError("modulus too large for exhaustive residue scan")
    rec(0)
    return out


def congruence_certificate(gram: Sequence[Sequence], modulus: int) -> bool:
    """True when Q(x) = 0 mod modulus identically on Z^n, verified by
    evaluating on every residue vector.  Accepts indefinite Grams."""
    if isinstance(gram, IntMatrix):
        gram = gram.a
    return form_residues(gram, modulus) == {0}


# -- reports -------------------------------------------------------------------


@dataclass
class RepresentationReport:
    bound: int
    represented: List[int]
    exceptions: List[int]
    witnesses: Dict[int, Tuple[int, ...]] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    modulus: int = 1

    def to_jsonable(self) -> dict:
        return {
            "bound": self.bound,
            "modulus": self.modulus,
            "represented_count": len(self.represented),
            "exceptions": list(self.exceptions),
            "witnesses": {str(k): list(v) for k, v in sorted(self.witnesses.items())},
            "notes": list(self.notes),
        }




def represented_set(f: PosDefForm, bound: int, *, modulus: int = 1) -> RepresentationReport:
    """Exact represented/exception partition of [1, bound] (or of the
    multiples of `modulus` in it), with witnesses for a sample."""
    if bound < 1:
        raise FormError("bound must be >= 1")
    candidates = [n for n in range(1, bound + 1) if n % modulus == 0]
    notes = []
    if f.flipped_from_negative:
        notes.append(
            "form obtained by flipping a negative-definite lattice gram; "
            "'represents n' refers to the positive flip"
        )
    represented: Set[int] = set()
    exceptions: Set[int] = set()

    # congruence prefilter
    moduli = [m for m in (4, 8, 9) if m**f.rank <= 300_000]
    residue_sets = {m: f.residues(m) for m in moduli}
    sieved = []
    for n in candidates:
        if any(n % m not in residue_sets[m] for m in moduli):
            exceptions.add(n)
        else:
            sieved.append(n)
    if moduli:
        notes.append(f"congruence prefilter moduli: {moduli}")

    # orthogonal-block bitset convolution when all blocks enumerate cheaply
    comps = f.blocks()
    done_by_blocks = False
    if len(comps) > 1:
        est_total = 0.0
        for comp in comps:
            sub = f.subform(comp)
            det = float(sub.determinant())
            est_total += _BALL_VOLUME.get(sub.rank, 5.0) * bound ** (sub.rank / 2) / det**0.5
        if est_total <= 2_000_000:
            acc = 1  # bit v set <=> v is a value of the partial sum (0 included)
            mask = (1 << (bound + 1)) - 1
            for comp in comps:
                sub = f.subform(comp)
                vals = {0}
                for _, v in sub.short_vectors_upto(bound):
                    vals.add(v)
                block_acc = 0
                for v in sorted(vals):
                    block_acc |= acc << v
                acc = block_acc & mask
            for n in sieved:
                if (acc >> n) & 1:
                    represented.add(n)
                else:
                    exceptions.add(n)
            done_by_blocks = True
            notes.append(f"evaluated via orthogonal blocks {comps}")

    if not done_by_blocks:
        for n in sieved:
            if f.representation(n) is not None:
                represented.add(n)
            else:
                exceptions.add(n)

    rep_sorted = sorted(represented)
    sample = rep_sorted[:5] + rep_sorted[-2:]
    witnesses = f.witnesses_for(set(sample)) if sample else {}
    return RepresentationReport(
        bound=bound,
        represented=rep_sorted,
        exceptions=sorted(exceptions),
        witnesses=witnesses,
        notes=notes,
        modulus=modulus,
    )


def short_vectors(f: PosDefForm, bound: int) -> List[Tuple[Tuple[int, ...], int]]:
    """All x in Z^rank with 0 < Q(x) <= bound (complete)."""
    return f.short_vectors_upto(bound)


def check_290(f: PosDefForm) -> bool:
    """Universality via the 290 criterion; on success, cross-check that no
    exception below 290 exists."""
    found = f.witnesses_for(set(CRITICAL_290))
    ok = len(found) == len(CRITICAL_290)
    if ok:
        for n, x in found.items():
            assert f.value(x) == n
        cross = represented_set(f, 290)
        assert cross.exceptions == [], "290 cross-check failed"
    return ok


def scaled_representability(f: PosDefForm, modulus: int, bound: int) -> RepresentationReport:
    """Representability restricted to the arithmetic progression
    modulus * Z, with a congruence certificate when the form is identically
    zero mod modulus."""
    if modulus < 1:
        raise FormError("modulus must be >= 1")
    report = represented_set(f, bound, modulus=modulus)
    if modulus > 1 and congruence_certificate(f.gram, modulus):
        report.notes.append(
            f"congruence certificate: Q = 0 mod {modulus} identically on Z^n"
        )
    return report
