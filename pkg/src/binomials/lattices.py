"""Integer lattices, partial characters, and lattice/toric ideals.

All linear algebra is exact over Python's arbitrary-precision integers
(Fractions where division is needed); lattices are canonicalized by a
row-style Hermite normal form, so equality is plain tuple comparison.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .engine import BinomialIdeal, binomial, monomial, saturate_vars
from .errors import (ExtensionRankError, InconsistentCharacterError,
                     InputError, NotPositiveError, NotPureError)
from .scalars import Scalar, ONE


# ---------------------------------------------------------------------------
# exact integer matrix helpers (matrices are lists of row lists)

def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    rows, mid, cols = len(A), len(B), len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(mid)) for j in range(cols)]
            for i in range(rows)]


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def det(A):
    """Determinant by fraction-free elimination on a copy."""
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    sign = 1
    for c in range(n):
        pivot = next((r for r in range(c, n) if M[r][c] != 0), None)
        if pivot is None:
            return 0
        if pivot != c:
            M[c], M[pivot] = M[pivot], M[c]
            sign = -sign
        for r in range(c + 1, n):
            factor = M[r][c] / M[c][c]
            for j in range(c, n):
                M[r][j] -= factor * M[c][j]
    out = Fraction(sign)
    for i in range(n):
        out *= M[i][i]
    assert out.denominator == 1
    return int(out)


def invert_unimodular(V):
    """Inverse of an integer matrix with determinant +-1."""
    n = len(V)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(V)]
    for c in range(n):
        pivot = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[pivot] = M[pivot], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                factor = M[r][c]
                M[r] = [x - factor * y for x, y in zip(M[r], M[c])]
    out = [[x for x in row[n:]] for row in M]
    assert all(x.denominator == 1 for row in out for x in row)
    return [[int(x) for x in row] for row in out]


def _hnf_rows(vectors, with_transform):
    """Row HNF: positive pivots in echelon position, entries above a pivot
    reduced into [0, pivot).  Returns (H, T) with H = T * input, T square
    unimodular; zero rows of H sit at the bottom."""
    rows = [list(v) for v in vectors]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    T = identity(m) if with_transform else None

    def combine(dst, src, q):
        rows[dst] = [a - q * b for a, b in zip(rows[dst], rows[src])]
        if T is not None:
            T[dst] = [a - q * b for a, b in zip(T[dst], T[src])]

    def swap(i, j):
        rows[i], rows[j] = rows[j], rows[i]
        if T is not None:
            T[i], T[j] = T[j], T[i]

    def negate(i):
        rows[i] = [-a for a in rows[i]]
        if T is not None:
            T[i] = [-a for a in T[i]]

    r = 0
    for col in range(n):
        while True:
            live = [i for i in range(r, m) if rows[i][col] != 0]
            if not live:
                break
            pivot = min(live, key=lambda i: (abs(rows[i][col]), i))
            swap(r, pivot)
            done = True
            for i in range(r + 1, m):
                if rows[i][col] != 0:
                    combine(i, r, rows[i][col] // rows[r][col])
                    done = done and rows[i][col] == 0
            if done:
                break
        if r < m and rows[r][col] != 0:
            if rows[r][col] < 0:
                negate(r)
            for i in range(r):
                q = rows[i][col] // rows[r][col]
                if q:
                    combine(i, r, q)
            r += 1
    return [tuple(v) for v in rows], ([tuple(v) for v in T] if T is not None else None), r


def hnf(vectors):
    """Canonical HNF rows of the lattice generated by ``vectors``."""
    rows, _, rank = _hnf_rows(vectors, False)
    return tuple(rows[:rank])


def hnf_with_transform(vectors):
    """(H, T, rank) with H = T * vectors, T unimodular, zero rows last."""
    rows, T, rank = _hnf_rows(vectors, True)
    return tuple(rows), T, rank


def kernel_basis(A):
    """Basis of the integer right kernel {v : A v = 0}."""
    cols = transpose(A)
    if not cols:
        return []
    rows, T, rank = _hnf_rows(cols, True)
    return [T[i] for i in range(rank, len(cols))]


@dataclass(frozen=True)
class SmithForm:
    U: tuple
    D: tuple
    V: tuple

    def diagonal(self):
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0)))


def smith_normal_form(A):
    """U*A*V = D diagonal with d1 | d2 | ...; U, V unimodular."""
    if not A or not A[0]:
        size = len(A)
        return SmithForm(tuple(map(tuple, identity(size))),
                         tuple(tuple(row) for row in A),
                         ())
    m, n = len(A), len(A[0])
    D = [list(row) for row in A]
    U, V = identity(m), identity(n)

    def row_comb(dst, src, q):
        D[dst] = [a - q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def col_comb(dst, src, q):
        for row in D:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def row_negate(i):
        D[i] = [-a for a in D[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while True:
        entries = [(abs(D[i][j]), i, j) for i in range(t, m)
                   for j in range(t, n) if D[i][j] != 0]
        if not entries:
            break
        _, pi, pj = min(entries)
        row_swap(t, pi)
        col_swap(t, pj)
        while True:
            cleared = True
            for i in range(t + 1, m):
                if D[i][t] != 0:
                    row_comb(i, t, D[i][t] // D[t][t])
                    cleared = cleared and D[i][t] == 0
            for j in range(t + 1, n):
                if D[t][j] != 0:
                    col_comb(j, t, D[t][j] // D[t][t])
                    cleared = cleared and D[t][j] == 0
            if cleared and all(D[i][t] == 0 for i in range(t + 1, m)):
                break
            # a remainder became the new, strictly smaller pivot
            entries = [(abs(D[i][j]), i, j) for i in range(t, m)
                       for j in range(t, n) if D[i][j] != 0]
            _, pi, pj = min(entries)
            row_swap(t, pi)
            col_swap(t, pj)
        offender = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                         if D[i][j] % D[t][t] != 0), None)
        if offender is not None:
            row_comb(t, offender[0], -1)  # pull the row in; next pass shrinks the pivot
            continue
        if D[t][t] < 0:
            row_negate(t)
        t += 1
    return SmithForm(tuple(map(tuple, U)), tuple(map(tuple, D)), tuple(map(tuple, V)))


# ---------------------------------------------------------------------------
# lattices and partial characters

@dataclass(frozen=True)
class Lattice:
    """Sublattice of Z^n with an HNF-canonical basis (equality = basis equality)."""

    n: int
    basis: tuple

    @classmethod
    def from_vectors(cls, n, vectors):
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != n:
                raise InputError("lattice vector dimension %d, ambient is %d"
                                 % (len(v), n))
        return cls(n, hnf(vectors) if vectors else ())

    @property
    def rank(self):
        return len(self.basis)

    def express(self, v):
        """Coefficients of v over the HNF basis, or None when v is outside."""
        v = list(v)
        coeffs = []
        for row in self.basis:
            pivot_col = next(i for i, x in enumerate(row) if x != 0)
            q, r = divmod(v[pivot_col], row[pivot_col])
            if r != 0:
                return None
            coeffs.append(q)
            v = [a - q * b for a, b in zip(v, row)]
        return coeffs if all(x == 0 for x in v) else None

    def __contains__(self, v):
        return self.express(v) is not None


def lattice_intersect(L1, L2):
    """L1 n L2 via the kernel of the stacked basis matrix."""
    if L1.n != L2.n:
        raise InputError("lattices live in different ambient dimensions")
    if not L1.basis or not L2.basis:
        return Lattice.from_vectors(L1.n, [])
    stacked = [list(v) for v in L1.basis] + [[-x for x in v] for v in L2.basis]
    rows, T, rank = _hnf_rows(stacked, True)
    r1 = len(L1.basis)
    vectors = []
    for i in range(rank, len(stacked)):
        coeffs = T[i][:r1]
        vec = [0] * L1.n
        for c, b in zip(coeffs, L1.basis):
            vec = [a + c * x for a, x in zip(vec, b)]
        vectors.append(vec)
    return Lattice.from_vectors(L1.n, vectors)


def quotient_index(L, M):
    """|M / L| for L within M of equal rank."""
    if L.rank != M.rank:
        raise ExtensionRankError("quotient is infinite: ranks %d vs %d"
                                 % (L.rank, M.rank))
    C = []
    for v in L.basis:
        coeffs = M.express(v)
        if coeffs is None:
            raise InputError("lattice is not contained in the target lattice")
        C.append(coeffs)
    return abs(det(C)) if C else 1


@dataclass(frozen=True)
class PartialCharacter:
    """A group homomorphism rho : L -> k*, one Scalar per HNF basis vector."""

    lattice: Lattice
    values: tuple

    @classmethod
    def trivial(cls, lattice):
        return cls(lattice, (ONE,) * lattice.rank)

    @classmethod
    def from_generators(cls, n, vectors, values):
        """Canonicalize generator/value pairs; verifies consistency."""
        vectors = [tuple(v) for v in vectors]
        rows, T, rank = _hnf_rows(vectors, True) if vectors else ((), None, 0)
        basis_values = []
        for i in range(rank):
            val = ONE
            for c, s in zip(T[i], values):
                val = val * s ** c
            basis_values.append(val)
        char = cls(Lattice(n, tuple(rows[:rank])), tuple(basis_values))
        for v, s in zip(vectors, values):
            got = char(v)
            if got != s:
                raise InconsistentCharacterError(
                    "values do not define a homomorphism: vector %r maps to "
                    "%s and %s" % (v, got, s))
        return char

    def __call__(self, v):
        coeffs = self.lattice.express(v)
        if coeffs is None:
            raise InputError("vector %r is outside the character's lattice" % (v,))
        out = ONE
        for c, s in zip(coeffs, self.values):
            out = out * s ** c
        return out


# ---------------------------------------------------------------------------
# saturations

def _p_valuation(d, p):
    v = 0
    while d % p == 0:
        d //= p
        v += 1
    return d, v


def saturations(L, p=0):
    """(Sat, Sat_p, Sat'_p) of a lattice; p = 0 follows the convention
    Sat_0(L) = L and Sat'_0(L) = Sat(L)."""
    if not L.basis:
        empty = Lattice.from_vectors(L.n, [])
        return empty, empty, empty
    S = smith_normal_form([list(v) for v in L.basis])
    Vinv = invert_unimodular([list(r) for r in S.V])
    diag = [d for d in S.diagonal() if d != 0]
    sat_rows = [Vinv[i] for i in range(len(diag))]
    sat = Lattice.from_vectors(L.n, sat_rows)
    if p == 0:
        return sat, L, sat
    sat_p_rows, sat_cop_rows = [], []
    for i, d in enumerate(diag):
        coprime, v = _p_valuation(d, p)
        sat_p_rows.append([coprime * x for x in Vinv[i]])
        sat_cop_rows.append([p ** v * x for x in Vinv[i]])
    return (sat,
            Lattice.from_vectors(L.n, sat_p_rows),
            Lattice.from_vectors(L.n, sat_cop_rows))


def is_saturated(L):
    return saturations(L)[0] == L


# ---------------------------------------------------------------------------
# lattice ideals

def _basis_binomial(v, value):
    plus = tuple(max(x, 0) for x in v)
    minus = tuple(max(-x, 0) for x in v)
    return binomial(plus, minus, value)


def lattice_ideal(rho, names):
    """I_L(rho) = <X^(b+) - rho(b) X^(b-) : b basis> saturated at all variables."""
    names = tuple(names)
    if len(names) != rho.lattice.n:
        raise InputError("ring has %d variables, lattice ambient is %d"
                         % (len(names), rho.lattice.n))
    gens = tuple(_basis_binomial(v, s) for v, s in zip(rho.lattice.basis, rho.values))
    return saturate_vars(BinomialIdeal(names, gens), range(len(names)))


def character_of(I):
    """The unique rho with I : (prod X_i)^infty = I_L(rho), for pure I."""
    gb = I.groebner()
    if any(b.is_monomial for b in gb.elements):
        raise NotPureError("ideal contains a monomial; no lattice character exists")
    sat = saturate_vars(I, range(I.n))
    elements = sat.groebner().elements
    if any(b.is_monomial for b in elements):
        raise NotPureError("saturation produced a monomial; ideal is not pure")
    vectors = [tuple(a - b for a, b in zip(e.lead, e.trail)) for e in elements]
    values = [e.coeff for e in elements]
    return PartialCharacter.from_generators(I.n, vectors, values)


def extend_character(rho, M):
    """All |M/L| extensions of rho to M, in lexicographic branch order."""
    L = rho.lattice
    if L.n != M.n:
        raise InputError("lattices live in different ambient dimensions")
    if L.rank != M.rank:
        raise ExtensionRankError(
            "index of the lattice inclusion is infinite (ranks %d vs %d)"
            % (L.rank, M.rank))
    if L == M:
        return [rho]
    C = []
    for v in L.basis:
        coeffs = M.express(v)
        if coeffs is None:
            raise InputError("character's lattice is not inside the extension lattice")
        C.append(coeffs)
    S = smith_normal_form(C)
    r = len(C)
    diag = S.diagonal()
    Vinv = invert_unimodular([list(row) for row in S.V])
    m_rows = mat_mul(Vinv, [list(v) for v in M.basis])
    target = []
    for i in range(r):
        val = ONE
        for c, s in zip(S.U[i], rho.values):
            val = val * s ** c
        target.append(val)
    out = []
    for branches in itertools.product(*(range(d) for d in diag)):
        values = [target[i].root(diag[i], branches[i]) for i in range(r)]
        ext = PartialCharacter.from_generators(M.n, m_rows, values)
        for v, s in zip(L.basis, rho.values):
            assert ext(v) == s
        out.append(ext)
    return out


def lattice_primary_decomposition(rho, names):
    """Minimal primary decomposition of I_L(rho) over characteristic zero:
    one prime component I_Sat(L)(rho_j) per extension of rho to Sat(L)."""
    sat = saturations(rho.lattice)[0]
    return [(ext, lattice_ideal(ext, names)) for ext in extend_character(rho, sat)]


# ---------------------------------------------------------------------------
# toric ideals, positivity, fibers

def _validate_columns(A):
    if not A or not A[0]:
        raise InputError("degree matrix must be nonempty")
    width = len(A[0])
    if any(len(row) != width for row in A):
        raise InputError("ragged degree matrix")
    for j in range(width):
        if all(row[j] == 0 for row in A):
            raise InputError("column %d of the degree matrix is zero" % j)


def toric_ideal(A, names):
    """Kernel ideal of the monomial map defined by the columns of A; prime."""
    _validate_columns(A)
    if len(A[0]) != len(names):
        raise InputError("matrix has %d columns, ring has %d variables"
                         % (len(A[0]), len(names)))
    kernel = Lattice.from_vectors(len(A[0]), kernel_basis(A))
    return lattice_ideal(PartialCharacter.trivial(kernel), names)


def _fm_eliminate(constraints, k):
    """Eliminate variable k from constraints sum(c[i] x_i) <= b."""
    zero_rows, pos, neg = [], [], []
    for c, b in constraints:
        if c[k] == 0:
            zero_rows.append((c, b))
        elif c[k] > 0:
            pos.append((c, b))
        else:
            neg.append((c, b))
    for cp, bp in pos:
        for cn, bn in neg:
            scale_p, scale_n = -cn[k], cp[k]
            c = tuple(scale_p * a + scale_n * d for a, d in zip(cp, cn))
            zero_rows.append((c, scale_p * bp + scale_n * bn))
    return zero_rows


def _fm_feasible(constraints, nvars):
    stages = [constraints]
    for k in range(nvars):
        constraints = _fm_eliminate(constraints, k)
        stages.append(constraints)
    return all(b >= 0 for _, b in stages[-1]), stages


def _fm_point(stages, nvars):
    """Back-substitute a rational feasible point from elimination stages."""
    point = [Fraction(0)] * nvars
    for k in range(nvars - 1, -1, -1):
        lower, upper = None, None
        for c, b in stages[k]:
            if c[k] == 0:
                continue
            rest = b - sum(ci * point[i] for i, ci in enumerate(c) if i != k)
            bound = Fraction(rest, c[k])
            if c[k] > 0:
                upper = bound if upper is None else min(upper, bound)
            else:
                lower = bound if lower is None else max(lower, bound)
        if lower is not None:
            point[k] = lower
        elif upper is not None:
            point[k] = upper
        else:
            point[k] = Fraction(0)
    return point


def is_positive(A):
    """True when the only nonnegative rational vector in ker(A) is zero,
    i.e. all fibers of the degree map are finite."""
    _validate_columns(A)
    n = len(A[0])
    constraints = []
    for row in A:
        constraints.append((tuple(row), 0))
        constraints.append((tuple(-x for x in row), 0))
    for i in range(n):
        constraints.append((tuple(-int(i == j) for j in range(n)), 0))
    constraints.append(((-1,) * n, -1))
    feasible, _ = _fm_feasible(constraints, n)
    return not feasible


def positive_witness(A):
    """Integer w with w . a_j >= 1 for every column a_j, or None."""
    _validate_columns(A)
    d = len(A)
    cols = transpose(A)
    constraints = [(tuple(-x for x in col), -1) for col in cols]
    feasible, stages = _fm_feasible(constraints, d)
    if not feasible:
        return None
    w = _fm_point(stages, d)
    scale = 1
    for x in w:
        scale = scale * x.denominator // __import__("math").gcd(scale, x.denominator)
    return [int(x * scale) for x in w]


def fibers(A, target):
    """All factorizations deg^(-1)(target), enumerated by bounded search."""
    _validate_columns(A)
    target = list(target)
    if len(target) != len(A):
        raise InputError("target has dimension %d, matrix has %d rows"
                         % (len(target), len(A)))
    if not is_positive(A):
        raise NotPositiveError("degree matrix is not positive; fibers may be infinite")
    w = positive_witness(A)
    assert w is not None
    cols = transpose(A)
    weights = [sum(wi * x for wi, x in zip(w, col)) for col in cols]
    assert all(wt >= 1 for wt in weights)
    n = len(cols)
    out = []

    def search(j, remaining, budget, partial):
        if budget < 0:
            return
        if j == n:
            if all(x == 0 for x in remaining):
                out.append(tuple(partial))
            return
        col, wt = cols[j], weights[j]
        for c in range(budget // wt + 1):
            rest = [r - c * x for r, x in zip(remaining, col)]
            search(j + 1, rest, budget - c * wt, partial + [c])

    budget = sum(wi * t for wi, t in zip(w, target))
    search(0, target, budget, [])
    return sorted(out)
