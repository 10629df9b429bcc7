"""Even integral lattices with Gram-matrix representation.

Covers construction from spec strings ("U(2)^2 + A_1^4"), discriminant
forms, overlattice gluing, orthogonal complements, root enumeration with ADE
identification, and small-rank isometry testing.  Root lattices are
negative definite by default; a trailing '-' in a spec flips the sign.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .exactmath import IntMatrix, kernel_basis, smith_normal_form
from .quadforms import PosDefForm

class LatticeError(ValueError):
    pass


class IntegralLattice:
    """A nondegenerate even lattice presented by an integer Gram matrix."""

    def __init__(self, gram, labels: Optional[Sequence[str]] = None):
        if not isinstance(gram, IntMatrix):
            gram = IntMatrix(gram)
        if not gram.is_symmetric():
            raise LatticeError("gram matrix must be symmetric")
        for i in range(gram.rows):
            if gram.a[i][i] % 2:
                raise LatticeError("lattice is not even (odd diagonal entry)")
        self.gram = gram
        self.rank = gram.rows
        self.labels = list(labels) if labels else None
        self._det = gram.det()
        if self._det == 0:
            raise LatticeError("degenerate form rejected at construction")

    def det(self) -> int:
        return self._det

    def signature(self) -> Tuple[int, int]:
        """(positive, negative) inertia indices, computed exactly."""
        n = self.rank
        m = [[Fraction(x) for x in row] for row in self.gram.a]
        pos = neg = 0
        idx = list(range(n))
        k = 0
        while k < n:
            if m[k][k] == 0:
                j = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
                if j is None:
                    k += 1
                    continue
                # make the diagonal entry nonzero: row/col k += row/col j
                for t in range(n):
                    m[k][t] += m[j][t]
                for t in range(n):
                    m[t][k] += m[t][j]
            d = m[k][k]
            if d > 0:
                pos += 1
            else:
                neg += 1
            for i in range(k + 1, n):
                f = m[i][k] / d
                if f:
                    for t in range(n):
                        m[i][t] -= f * m[k][t]
                    for t in range(n):
                        m[t][i] -= f * m[t][k]
            k += 1
        return pos, neg

    def is_negative_definite(self) -> bool:
        return self.signature() == (0, self.rank)

    def is_positive_definite(self) -> bool:
        return self.signature() == (self.rank, 0)

    def negate(self) -> "IntegralLattice":
        return IntegralLattice([[-x for x in row] for row in self.gram.a], self.labels)

    def direct_sum(self, other: "IntegralLattice") -> "IntegralLattice":
        n, m = self.rank, other.rank
        g = [[0] * (n + m) for _ in range(n + m)]
        for i in range(n):
            for j in range(n):
                g[i][j] = self.gram.a[i][j]
        for i in range(m):
            for j in range(m):
                g[n + i][n + j] = other.gram.a[i][j]
        labels = None
        if self.labels and other.labels:
            labels = self.labels + other.labels
        return IntegralLattice(g, labels)

    def pairing(self, x: Sequence, y: Sequence) -> Fraction:
        g = self.gram.a
        tot = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                tot += xi * sum(Fraction(g[i][j]) * y[j] for j in range(self.rank) if y[j])
        return tot

    def gram_json(self) -> str:
        return json.dumps(self.gram.a)

    def __repr__(self):
        return f"IntegralLattice(rank={self.rank}, det={self._det})"


# -- standard blocks -------------------------------------------------------------


def _ade_gram(family: str, n: int) -> List[List[int]]:
    """Negative-definite ADE root lattice Gram matrices."""
    if family == "A":
        if n < 1:
            raise LatticeError("A_n needs n >= 1")
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = -2
            if i + 1 < n:
                g[i][i + 1] = g[i + 1][i] = 1
        return g
    if family == "D":
        if n < 3:
            raise LatticeError("D_n needs n >= 3")
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = -2
        for i in range(n - 2):
            g[i][i + 1] = g[i + 1][i] = 1
        g[n - 3][n - 1] = g[n - 1][n - 3] = 1
        return g
    if family == "E":
        if n not in (6, 7, 8):
            raise LatticeError("E_n needs n in {6,7,8}")
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = -2
        # chain 0-1-2-...-(n-2), with node n-1 attached to node 2
        for i in range(n - 2):
            g[i][i + 1] = g[i + 1][i] = 1
        g[2][n - 1] = g[n - 1][2] = 1
        return g
    raise LatticeError(f"unknown family {family}")


U_GRAM = [[0, 1], [1, 0]]


# -- LatticeSpec parsing -----------------------------------------------------------


@dataclass
class LatticeSpec:
    """Parsed lattice expression; kept as the list of scaled atom blocks."""

    blocks: List[Tuple[str, int, int, bool]]  # (atom, subscript, scale, negate)
    diag_blocks: List[Tuple[List[int], int, bool]]
    text: str


class SpecParseError(LatticeError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} (at position {pos})")
        self.pos = pos


def parse_lattice_spec(text: str) -> List[IntegralLattice]:
    """Parse the grammar: atoms U, A<n>, D<n>, E<n>, diag(d1,...,dk);
    postfix (m) integer scaling, ^k repetition, trailing '-' negation;
    '+' direct sum.  Returns the list of blocks in order."""
    i = 0
    n = len(text)
    blocks: List[IntegralLattice] = []

    def skip_ws():
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    def read_int(signed=False) -> int:
        nonlocal i
        j = i
        if signed and j < n and text[j] in "+-":
            j += 1
        if j >= n or not text[j].isdigit():
            raise SpecParseError("expected an integer", i)
        while j < n and text[j].isdigit():
            j += 1
        val = int(text[i:j])
        i = j
        return val

    def read_atom() -> List[List[int]]:
        nonlocal i
        skip_ws()
        if i >= n:
            raise SpecParseError("expected a lattice atom", i)
        ch = text[i]
        if ch == "U":
            i += 1
            return [row[:] for row in U_GRAM]
        if ch in "ADE":
            i += 1
            if i < n and text[i] == "_":
                i += 1
            sub = read_int()
            return _ade_gram(ch, sub)
        if text.startswith("diag", i):
            i += 4
            skip_ws()
            if i >= n or text[i] != "(":
                raise SpecParseError("expected '(' after diag", i)
            i += 1
            entries = []
            while True:
                skip_ws()
                neg = False
                if i < n and text[i] == "-":
                    neg = True
                    i += 1
                v = read_int()
                entries.append(-v if neg else v)
                skip_ws()
                if i < n and text[i] == ",":
                    i += 1
                    continue
                break
            skip_ws()
            if i >= n or text[i] != ")":
                raise SpecParseError("expected ')' in diag", i)
            i += 1
            for e in entries:
                if e % 2:
                    raise SpecParseError("diag entries must be even", i)
            return [
                [entries[a] if a == b else 0 for b in range(len(entries))]
                for a in range(len(entries))
            ]
        raise SpecParseError(f"unknown atom {ch!r}", i)

    def scale_gram(g, m):
        return [[x * m for x in row] for row in g]

    while True:
        g = read_atom()
        skip_ws()
        # postfix scaling
        while i < n and text[i] == "(":
            save = i
            i += 1
            skip_ws()
            neg = False
            if i < n and text[i] == "-":
                neg = True
                i += 1
            start = i
            if i < n and text[i].isdigit():
                val = read_int()
                skip_ws()
                if i < n and text[i] == "/":
                    raise SpecParseError(
                        "non-integral scaling is not an integral lattice "
                        "(rational multiples live only in height Gram matrices)",
                        i,
                    )
                if i >= n or text[i] != ")":
                    raise SpecParseError("expected ')' after scale", i)
                i += 1
                if val == 0:
                    raise SpecParseError("scale factor must be nonzero", start)
                g = scale_gram(g, -val if neg else val)
            else:
                raise SpecParseError("expected integer scale", i)
            skip_ws()
        reps = 1
        if i < n and text[i] == "^":
            i += 1
            reps = read_int()
            if reps < 1:
                raise SpecParseError("repetition must be >= 1", i)
            skip_ws()
        if i < n and text[i] == "-" and (i + 1 >= n or text[i + 1] in " +"):
            g = scale_gram(g, -1)
            i += 1
            skip_ws()
        for _ in range(reps):
            blocks.append(IntegralLattice(g))
        skip_ws()
        if i < n and text[i] == "+":
            i += 1
            continue
        break
    skip_ws()
    if i != n:
        raise SpecParseError(f"trailing input {text[i:]!r}", i)
    return blocks


def build(spec: str) -> IntegralLattice:
    """Assemble the lattice described by a spec string."""
    blocks = parse_lattice_spec(spec)
    out = blocks[0]
    for b in blocks[1:]:
        out = out.direct_sum(b)
    return out


# -- discriminant forms -----------------------------------------------------------


class DiscriminantForm:
    """The finite quadratic form on L^dual / L, with Q/2Z-valued q and
    Q/Z-valued pairing, presented on a generating set."""

    def __init__(self, lattice: IntegralLattice):
        self.lattice = lattice
        s, u, v = smith_normal_form(lattice.gram)
        n = lattice.rank
        self._snf = (s, u, v)
        self.invariant_factors = [s.a[i][i] for i in range(n) if s.a[i][i] > 1]
        self.gens: List[List[Fraction]] = []
        for i in range(n):
            d = s.a[i][i]
            if d > 1:
                self.gens.append([Fraction(v.a[r][i], d) for r in range(n)])

    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def is_two_elementary(self) -> bool:
        return all(d == 2 for d in self.invariant_factors)

    # q in Q/2Z, b in Q/Z

    def q_of(self, vec: Sequence[Fraction]) -> Fraction:
        return self.lattice.pairing(vec, vec) % 2

    def b_of(self, x, y) -> Fraction:
        return self.lattice.pairing(x, y) % 1

    def q_values(self) -> List[Fraction]:
        return [self.q_of(g) for g in self.gens]

    def in_dual(self, vec: Sequence[Fraction]) -> bool:
        g = self.lattice.gram.a
        for i in range(self.lattice.rank):
            s = sum(Fraction(g[i][j]) * vec[j] for j in range(self.lattice.rank))
            if s.denominator != 1:
                return False
        return True

    def class_of(self, vec: Sequence[Fraction]) -> Tuple[int, ...]:
        """Coordinates of [vec] on the SNF generator basis."""
        if not self.in_dual(vec):
            raise LatticeError("vector is not in the dual lattice")
        s, u, v = self._snf
        n = self.lattice.rank
        g = self.lattice.gram.a
        w = [sum(Fraction(g[i][j]) * vec[j] for j in range(n)) for i in range(n)]
        uw = [sum(u.a[i][j] * w[j] for j in range(n)) for i in range(n)]
        out = []
        for i in range(n):
            d = s.a[i][i]
            val = uw[i]
            assert val.denominator == 1
            if d > 1:
                out.append(int(val) % d)
        return tuple(out)

    def element_vector(self, cls: Tuple[int, ...]) -> List[Fraction]:
        n = self.lattice.rank
        out = [Fraction(0)] * n
        for c, g in zip(cls, self.gens):
            for i in range(n):
                out[i] += c * g[i]
        return out

    def all_classes(self):
        if self.order() > 65536:
            raise LatticeError("discriminant group too large to enumerate")
        def rec(i, acc):
            if i == len(self.invariant_factors):
                yield tuple(acc)
                return
            for c in range(self.invariant_factors[i]):
                acc.append(c)
                yield from rec(i + 1, acc)
                acc.pop()
        yield from rec(0, [])

    def q_of_class(self, cls: Tuple[int, ...]) -> Fraction:
        return self.q_of(self.element_vector(cls))

    def b_of_classes(self, c1, c2) -> Fraction:
        return self.b_of(self.element_vector(c1), self.element_vector(c2))


def discriminant_form(lattice: IntegralLattice) -> DiscriminantForm:
    return DiscriminantForm(lattice)


def is_two_elementary(lattice: IntegralLattice) -> bool:
    return discriminant_form(lattice).is_two_elementary()


def find_anti_isometry(
    d1: DiscriminantForm,
    gens1: List[List[Fraction]],
    d2: DiscriminantForm,
) -> Optional[List[Tuple[int, ...]]]:
    """Search for images of the given generators of d1 inside d2 realising
    q -> -q and b -> -b; returns image class tuples or None.

    Exhaustive for groups of order <= 2^12, so a None answer is a proof of
    non-existence on this generating set."""
    if d1.invariant_factors != d2.invariant_factors:
        return None
    classes1 = [d1.class_of(g) for g in gens1]
    # given generators must generate d1
    if _span_size(classes1, d1.invariant_factors) != d1.order():
        raise LatticeError("supplied vectors do not generate the discriminant group")
    targets = list(d2.all_classes())
    tq = {c: d2.q_of_class(c) for c in targets}
    tb: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Fraction] = {}

    def bpair(c1, c2):
        key = (c1, c2)
        if key not in tb:
            tb[key] = d2.b_of_classes(c1, c2)
        return tb[key]

    q1 = [d1.q_of(g) for g in gens1]
    b1 = [[d1.b_of(x, y) for y in gens1] for x in gens1]
    k = len(gens1)
    chosen: List[Tuple[int, ...]] = []

    def order_of(cls, factors):
        o = 1
        for c, d in zip(cls, factors):
            if c:
                o = o * (d // gcd(c, d)) // gcd(o, d // gcd(c, d))
        return o

    orders1 = [order_of(c, d1.invariant_factors) for c in classes1]

    source_span = [_span_size(classes1[: i + 1], d1.invariant_factors) for i in range(k)]

    def rec(i: int) -> bool:
        if i == k:
            return _span_size(chosen, d2.invariant_factors) == d2.order()
        for cand in targets:
            if tq[cand] != (-q1[i]) % 2:
                continue
            if order_of(cand, d2.invariant_factors) != orders1[i]:
                continue
            if any(bpair(chosen[j], cand) != (-b1[j][i]) % 1 for j in range(i)):
                continue
            chosen.append(cand)
            if _span_size(chosen, d2.invariant_factors) == source_span[i] and rec(i + 1):
                return True
            chosen.pop()
        return False

    return list(chosen) if rec(0) else None


def _span_size(classes: List[Tuple[int, ...]], factors: List[int]) -> int:
    """Order of the subgroup generated by the given class tuples."""
    seen: Set[Tuple[int, ...]] = {tuple([0] * len(factors))}
    for g in classes:
        step = 1
        for c, d in zip(g, factors):
            if c:
                o = d // gcd(c, d)
                step = step * o // gcd(step, o)
        new_seen = set()
        for s in seen:
            cur = s
            for _ in range(step):
                new_seen.add(cur)
                cur = tuple((a + b) % d for a, b, d in zip(cur, g, factors))
        seen = new_seen
    return len(seen)


# -- overlattices and sublattices ---------------------------------------------------


def lattice_from_generators(
    rows: Sequence[Sequence[Fraction]], ambient: IntegralLattice
) -> Tuple[IntegralLattice, List[List[Fraction]]]:
    """The lattice spanned over Z by the given (rational) generator rows
    inside the ambient lattice's quadratic space; returns it with a basis."""
    from .exactmath.intmatrix import hnf_rows

    n = ambient.rank
    den = 1
    for r in rows:
        for x in r:
            den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    scaled = IntMatrix([[int(Fraction(x) * den) for x in r] for r in rows])
    basis_scaled = hnf_rows(scaled)
    basis = [[Fraction(x, den) for x in row] for row in basis_scaled.a]
    k = len(basis)
    gram = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            val = ambient.pairing(basis[i], basis[j])
            gram[i][j] = val
    for i in range(k):
        for j in range(k):
            if gram[i][j].denominator != 1:
                raise LatticeError("glue vectors not admissible (non-integral gram)")
    for i in range(k):
        if int(gram[i][i]) % 2:
            raise LatticeError("glue vectors not admissible (odd norm)")
    return IntegralLattice([[int(x) for x in row] for row in gram]), basis


def overlattice(lattice: IntegralLattice, glue: Sequence[Sequence]) -> IntegralLattice:
    """Finite-index overlattice generated by L and the glue vectors
    (rational vectors in ambient coordinates)."""
    n = lattice.rank
    rows: List[List[Fraction]] = [
        [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)
    ]
    for gvec in glue:
        rows.append([Fraction(x) for x in gvec])
    out, basis = lattice_from_generators(rows, lattice)
    if out.rank != n:
        raise LatticeError("overlattice construction lost rank")
    # index check: [L' : L]^2 * det L' = det L
    index_sq = Fraction(abs(lattice.det()), abs(out.det()))
    if index_sq.denominator != 1:
        raise LatticeError("glue vectors not admissible (index inconsistency)")
    return out


def orthogonal_complement(lattice: IntegralLattice, v: Sequence[int]) -> IntegralLattice:
    """Gram of {x in L : x.v = 0} on a Z-basis."""
    if all(x == 0 for x in v):
        raise LatticeError("cannot take the complement of the zero vector")
    n = lattice.rank
    if len(v) != n:
        raise LatticeError("vector has wrong length")
    content = 0
    for x in v:
        content = gcd(content, int(x))
    if content != 1:
        raise LatticeError("vector must be primitive in L")
    w = [sum(lattice.gram.a[i][j] * v[j] for j in range(n)) for i in range(n)]
    ker = kernel_basis(IntMatrix([w]))
    gram = [
        [int(lattice.pairing(ker.a[i], ker.a[j])) for j in range(ker.rows)]
        for i in range(ker.rows)
    ]
    try:
        return IntegralLattice(gram)
    except LatticeError as e:
        raise LatticeError(f"complement is degenerate: {e}") from e


# -- roots -------------------------------------------------------------------------


def roots(lattice: IntegralLattice) -> List[Tuple[int, ...]]:
    """All vectors of norm -2 (negative-definite lattices only); complete
    enumeration with exact bounds."""
    if not lattice.is_negative_definite():
        raise LatticeError("enumeration requires definite form")
    form = PosDefForm.from_lattice_gram(lattice.gram.a)
    return [vec for vec, val in form.short_vectors_upto(2) if val == 2]


_ADE_TABLE = {
    # (rank, root_count, |det|) -> symbol
}


def _identify_component(rank: int, nroots: int, det: int) -> str:
    if nroots == rank * (rank + 1) and det == rank + 1:
        return f"A{rank}"
    if rank >= 3 and nroots == 2 * rank * (rank - 1) and det == 4:
        return f"D{rank}"
    if (rank, nroots, det) == (6, 72, 3):
        return "E6"
    if (rank, nroots, det) == (7, 126, 2):
        return "E7"
    if (rank, nroots, det) == (8, 240, 1):
        return "E8"
    raise LatticeError(
        f"unrecognised root component (rank={rank}, roots={nroots}, det={det})"
    )


def root_sublattice_type(lattice: IntegralLattice) -> Dict[str, int]:
    """ADE decomposition of the sublattice generated by the roots, as a
    multiset {symbol: multiplicity}."""
    rts = roots(lattice)
    if not rts:
        return {}
    # split roots into orthogonality components
    comps: List[List[Tuple[int, ...]]] = []
    assigned = [False] * len(rts)
    for s in range(len(rts)):
        if assigned[s]:
            continue
        queue = [s]
        assigned[s] = True
        comp = [s]
        while queue:
            a = queue.pop()
            for b in range(len(rts)):
                if not assigned[b] and lattice.pairing(rts[a], rts[b]) != 0:
                    assigned[b] = True
                    queue.append(b)
                    comp.append(b)
        comps.append([rts[i] for i in comp])
    out: Dict[str, int] = {}
    total = 0
    for comp in comps:
        rows = [[Fraction(x) for x in vec] for vec in comp]
        sub, _ = lattice_from_generators(rows, lattice)
        sym = _identify_component(sub.rank, len(comp), abs(sub.det()))
        out[sym] = out.get(sym, 0) + 1
        total += len(comp)
    assert total == len(rts)
    return out


# -- isometry testing ---------------------------------------------------------------


def is_isometric_small(l1: IntegralLattice, l2: IntegralLattice, *, box: int = 3) -> bool:
    """Isometry test for rank <= 8.

    Definite pairs run a complete backtracking search over norm-matched short
    vectors (a False is a proof).  Indefinite pairs with matching invariants
    run a bounded-coefficient search for an explicit base-change certificate;
    if none is found within the box the search raises rather than guessing.
    """
    if l1.rank > 8 or l2.rank > 8:
        raise LatticeError("exceeds small-rank isometry limit")
    if l1.rank != l2.rank or l1.det() != l2.det():
        return False
    if l1.signature() != l2.signature():
        return False
    s1, _, _ = smith_normal_form(l1.gram)
    s2, _, _ = smith_normal_form(l2.gram)
    if [s1.a[i][i] for i in range(s1.rows)] != [s2.a[i][i] for i in range(s2.rows)]:
        return False
    pos, neg = l1.signature()
    if pos == 0 or neg == 0:
        g1 = l1.gram.a if pos else [[-x for x in r] for r in l1.gram.a]
        g2 = l2.gram.a if pos else [[-x for x in r] for r in l2.gram.a]
        return _definite_isometry(g1, g2)
    for b in range(2, box + 1):
        found = _bounded_isometry(l1, l2, b)
        if found is not None:
            return True
    raise LatticeError(
        "isometry search inconclusive: invariants match but no certificate "
        f"was found with coefficients bounded by {box}"
    )


def _definite_isometry(g1, g2) -> bool:
    n = len(g1)
    maxnorm = max(g1[i][i] for i in range(n))
    form2 = PosDefForm(g2)
    pool = [v for v, _ in form2.short_vectors_upto(maxnorm)]
    by_norm: Dict[int, List[Tuple[int, ...]]] = {}
    for v in pool:
        by_norm.setdefault(form2.value(v), []).append(v)
    # quick invariant: norm histograms of short vectors must agree
    form1 = PosDefForm(g1)
    hist1: Dict[int, int] = {}
    for _, val in form1.short_vectors_upto(maxnorm):
        hist1[val] = hist1.get(val, 0) + 1
    hist2: Dict[int, int] = {}
    for _, val in form2.short_vectors_upto(maxnorm):
        hist2[val] = hist2.get(val, 0) + 1
    if hist1 != hist2:
        return False

    chosen: List[Tuple[int, ...]] = []

    def pair2(x, y):
        return sum(x[i] * sum(g2[i][j] * y[j] for j in range(n)) for i in range(n))

    def rec(i):
        if i == n:
            return True
        for cand in by_norm.get(g1[i][i], []):
            if all(pair2(chosen[j], cand) == g1[j][i] for j in range(i)):
                chosen.append(cand)
                if rec(i + 1):
                    return True
                chosen.pop()
        return False

    return rec(0)


def _bounded_isometry(l1, l2, box) -> Optional[List[Tuple[int, ...]]]:
    n = l1.rank
    g1 = l1.gram.a
    g2 = l2.gram.a
    wanted = {g1[i][i] for i in range(n)}
    # depth-first generation of candidate vectors with coefficients in
    # [-box, box], maintaining w = G2 v and the norm incrementally
    by_norm: Dict[int, List[Tuple[Tuple[int, ...], Tuple[int, ...]]]] = {}
    vec = [0] * n
    w = [0] * n

    def gen(k: int, norm: int):
        if k == n:
            if norm in wanted and any(vec):
                by_norm.setdefault(norm, []).append((tuple(vec), tuple(w)))
            return
        row = g2[k]
        for c in range(-box, box + 1):
            vec[k] = c
            if c == 0:
                gen(k + 1, norm)
                continue
            dn = 2 * c * w[k] + c * c * row[k]
            for t in range(n):
                w[t] += c * row[t]
            gen(k + 1, norm + dn)
            for t in range(n):
                w[t] -= c * row[t]
        vec[k] = 0

    gen(0, 0)
    chosen: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = []

    def rec(i):
        if i == n:
            return True
        for cand in by_norm.get(g1[i][i], ()):
            cv = cand[0]
            ok = True
            for j in range(i):
                wj = chosen[j][1]
                if sum(a * b for a, b in zip(wj, cv)) != g1[j][i]:
                    ok = False
                    break
            if ok:
                chosen.append(cand)
                if rec(i + 1):
                    return True
                chosen.pop()
        return False

    return [c[0] for c in chosen] if rec(0) else None
