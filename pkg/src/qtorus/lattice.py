"""Integer-lattice computations for the exponent lattice.

The commutation data of the algebra lives in r antisymmetric integer n x n
matrices.  Everything downstream (center, commutative sublattices, the
dimension invariant) reduces to exact questions about the induced alternating
pairing(s) on Z^n, answered here with Smith/Hermite normal forms and bounded
search.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property

from .errors import DimensionMismatch, InvalidExponentSystem, SearchSpaceTooLarge
from .scalars import FieldMode, ScalarField, make_field

Matrix = list[list[int]]
Vector = tuple[int, ...]


# ----------------------------------------------------------------------
# exponent systems


@dataclass(frozen=True)
class ExponentSystem:
    """Rank of the lattice plus the r exponent matrices of the multiparameters.

    Entry E^(k)[i][j] is the exponent of the k-th base parameter in the
    commutation scalar between the i-th and j-th generators.
    """

    n: int
    matrices: tuple[tuple[Vector, ...], ...]
    mode: FieldMode

    @staticmethod
    def create(n: int, matrices, mode: FieldMode) -> "ExponentSystem":
        mats = tuple(tuple(tuple(int(x) for x in row) for row in mat) for mat in matrices)
        sys = ExponentSystem(n, mats, mode)
        sys.validate()
        return sys

    @property
    def r(self) -> int:
        return len(self.matrices)

    @cached_property
    def field(self) -> ScalarField:
        return make_field(self.mode)

    def validate(self) -> None:
        if self.n < 1:
            raise InvalidExponentSystem(0, 0, 0, "lattice rank must be >= 1")
        if self.r != self.mode.r:
            raise InvalidExponentSystem(0, 0, 0, f"expected {self.mode.r} matrices, got {self.r}")
        for k, mat in enumerate(self.matrices, start=1):
            if len(mat) != self.n or any(len(row) != self.n for row in mat):
                raise InvalidExponentSystem(k, 0, 0, f"matrix {k} is not {self.n}x{self.n}")
            for i in range(self.n):
                if mat[i][i] != 0:
                    raise InvalidExponentSystem(k, i + 1, i + 1)
                for j in range(self.n):
                    if mat[i][j] != -mat[j][i]:
                        raise InvalidExponentSystem(k, i + 1, j + 1)

    def pairing(self, a, b) -> Vector:
        """The alternating pairing (a^T E^(k) b)_k in Z^r."""
        a = tuple(a)
        b = tuple(b)
        if len(a) != self.n or len(b) != self.n:
            raise DimensionMismatch(f"expected vectors of length {self.n}")
        out = []
        for mat in self.matrices:
            s = 0
            for i, ai in enumerate(a):
                if ai:
                    row = mat[i]
                    s += ai * sum(row[j] * bj for j, bj in enumerate(b) if bj)
            out.append(s)
        return tuple(out)

    def pairing_trivial(self, pairing_value: Vector) -> bool:
        """Whether a pairing value means 'commutes' (exactly, or mod m)."""
        if self.mode.is_root:
            return all(v % self.mode.m == 0 for v in pairing_value)
        return not any(pairing_value)

    def q_power(self, e) -> "object":
        return self.field.q_power(e)

    def __str__(self):
        mode = f"root m={self.mode.m}" if self.mode.is_root else f"generic r={self.r}"
        return f"ExponentSystem(n={self.n}, {mode})"


def validate(system: ExponentSystem) -> None:
    """Raise InvalidExponentSystem naming the first offending (k, i, j)."""
    system.validate()


# ----------------------------------------------------------------------
# integer linear algebra


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def smith_normal_form(m_in) -> tuple[Matrix, Matrix, Matrix]:
    """Return unimodular (U, D, V) with U * M * V = D, D diagonal, d1 | d2 | ...."""
    a = [[int(x) for x in row] for row in m_in]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # locate a minimal nonzero pivot in the trailing submatrix
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
        # pivot must divide the rest of the submatrix for the divisor chain
        # (fold an offending row in and redo elimination)
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue
        t += 1
    for i in range(limit):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    return u, a, v


def hermite_normal_form(m_in) -> Matrix:
    """Row-style Hermite normal form; zero rows are dropped.

    Pivots are positive, entries above a pivot are reduced into [0, pivot).
    The result is the canonical basis of the row lattice.
    """
    a = [list(map(int, row)) for row in m_in]
    if not a:
        return []
    cols = len(a[0])
    row = 0
    for col in range(cols):
        if row >= len(a):
            break
        # gcd the column below `row` into a single pivot
        piv = None
        for i in range(row, len(a)):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        for i in range(row + 1, len(a)):
            while a[i][col]:
                q = a[row][col] // a[i][col]
                a[row] = [x - q * y for x, y in zip(a[row], a[i])]
                a[row], a[i] = a[i], a[row]
        if a[row][col] < 0:
            a[row] = [-x for x in a[row]]
        for i in range(row):
            q = a[i][col] // a[row][col]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[row])]
        row += 1
    return [r for r in a[:row]]


def integer_rank(m_in) -> int:
    """Rank over the rationals, by fraction-free elimination."""
    a = [list(map(int, row)) for row in m_in]
    if not a:
        return 0
    cols = len(a[0])
    rank = 0
    for col in range(cols):
        piv = None
        for i in range(rank, len(a)):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(rank + 1, len(a)):
            if a[i][col]:
                p, c = a[rank][col], a[i][col]
                g = math.gcd(p, c)
                a[i] = [(p // g) * x - (c // g) * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == len(a):
            break
    return rank


def solve_integer_membership(basis_rows: list[Vector], v: Vector) -> tuple[int, ...] | None:
    """Coordinates of v in the integer row span of basis_rows, or None."""
    if not basis_rows:
        return () if not any(v) else None
    mt = [[basis_rows[i][j] for i in range(len(basis_rows))] for j in range(len(v))]
    u, d, vv = smith_normal_form(mt)
    uv = [sum(u[i][j] * v[j] for j in range(len(v))) for i in range(len(v))]
    k = len(basis_rows)
    z = [0] * k
    for i in range(len(v)):
        di = d[i][i] if i < min(len(d), k) else 0
        if di:
            if uv[i] % di:
                return None
            z[i] = uv[i] // di
        elif uv[i]:
            return None
    x = [sum(vv[i][j] * z[j] for j in range(k)) for i in range(k)]
    return tuple(x)


# ----------------------------------------------------------------------
# sublattices


@dataclass(frozen=True)
class Sublattice:
    """A subgroup of Z^n given by an independent integer basis (row vectors)."""

    n: int
    basis: tuple[Vector, ...] = field(default=())

    @staticmethod
    def from_vectors(n: int, vectors) -> "Sublattice":
        vecs = tuple(tuple(int(x) for x in v) for v in vectors)
        for v in vecs:
            if len(v) != n:
                raise DimensionMismatch(f"expected vectors of length {n}")
        if vecs and integer_rank(list(vecs)) != len(vecs):
            raise ValueError("basis vectors are not linearly independent")
        return Sublattice(n, vecs)

    @property
    def rank(self) -> int:
        return len(self.basis)

    @cached_property
    def saturated(self) -> bool:
        """True when Z^n modulo this sublattice is torsion-free."""
        if not self.basis:
            return True
        _, d, _ = smith_normal_form([list(v) for v in self.basis])
        return all(d[i][i] == 1 for i in range(self.rank))

    def contains(self, v) -> bool:
        return self.coordinates(v) is not None

    def coordinates(self, v) -> tuple[int, ...] | None:
        v = tuple(int(x) for x in v)
        if len(v) != self.n:
            raise DimensionMismatch(f"expected a vector of length {self.n}")
        return solve_integer_membership(list(self.basis), v)

    def hnf(self) -> tuple[Vector, ...]:
        """Canonical (Hermite) basis; equal lattices give equal results."""
        return tuple(tuple(r) for r in hermite_normal_form([list(v) for v in self.basis]))

    def same_lattice(self, other: "Sublattice") -> bool:
        return self.n == other.n and self.hnf() == other.hnf()


def coordinate_family(n: int) -> list[Sublattice]:
    """The 2^n sublattices spanned by subsets of the standard basis.

    Ordered by descending rank, then lexicographically by index subset.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            basis = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in subset)
            out.append(Sublattice(n, basis))
    return out


# ----------------------------------------------------------------------
# center, commutativity, dimension


def center_lattice(system: ExponentSystem) -> Sublattice:
    """The sublattice of exponents whose monomials are central.

    Generic mode: the saturated kernel of the stacked exponent matrices.
    Root mode: the congruence kernel mod m (always of full rank n).
    """
    system.validate()
    n = system.n
    stacked = [list(row) for mat in system.matrices for row in mat]
    u, d, v = smith_normal_form(stacked)
    if system.mode.is_root:
        m = system.mode.m
        cols = []
        for i in range(n):
            di = d[i][i] if i < min(len(d), n) else 0
            scale = m // math.gcd(di, m)
            cols.append(tuple(scale * v[j][i] for j in range(n)))
        basis = cols
    else:
        basis = []
        for i in range(n):
            di = d[i][i] if i < min(len(d), n) else 0
            if di == 0:
                basis.append(tuple(v[j][i] for j in range(n)))
    canon = hermite_normal_form([list(b) for b in basis]) if basis else []
    return Sublattice(n, tuple(tuple(r) for r in canon))


def is_commutative_sublattice(b: Sublattice, system: ExponentSystem) -> bool:
    """Whether the pairing vanishes (mod m in root mode) on all basis pairs."""
    for i in range(b.rank):
        for j in range(i + 1, b.rank):
            if not system.pairing_trivial(system.pairing(b.basis[i], b.basis[j])):
                return False
    return True


@dataclass(frozen=True)
class DimensionResult:
    """Max rank of a commutative sublattice; exact when lower == upper."""

    lower: int
    upper: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError(f"dimension not certified exactly (bounds {self.lower}..{self.upper})")
        return self.lower


def algebra_dimension(system: ExponentSystem, search_bound: int = 2, budget: int = 2_000_000) -> DimensionResult:
    """Max rank of a sublattice on which the algebra is commutative.

    Exact for root mode (always n) and for generic r = 1 (n - rank/2);
    for generic r >= 2 a certified bound pair from bounded search plus the
    per-matrix upper bound.
    """
    system.validate()
    n = system.n
    if system.mode.is_root:
        return DimensionResult(n, n)
    if system.r == 1:
        rk = integer_rank([list(row) for row in system.matrices[0]])
        val = n - rk // 2
        return DimensionResult(val, val)
    upper = min(n - integer_rank([list(row) for row in mat]) // 2 for mat in system.matrices)
    lower, _ = _max_isotropic_search(system, search_bound, budget)
    return DimensionResult(lower, upper)


def brute_force_max_isotropic(system: ExponentSystem, coeff_bound: int, budget: int = 2_000_000) -> int:
    """Exhaustive search for the largest pairwise-isotropic independent set
    among vectors with entries in [-coeff_bound, coeff_bound].

    Independent oracle for the dimension formula; the result is always a
    certified lower bound for the true dimension.
    """
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be >= 1")
    rank, _ = _max_isotropic_search(system, coeff_bound, budget)
    return rank


def brute_force_witness(system: ExponentSystem, coeff_bound: int, budget: int = 2_000_000) -> tuple[int, tuple[Vector, ...]]:
    """Like brute_force_max_isotropic but also returns the first maximal basis
    found in lexicographic search order."""
    return _max_isotropic_search(system, coeff_bound, budget)


def _candidate_vectors(system: ExponentSystem, bound: int) -> list[Vector]:
    n = system.n
    cands = []
    for vec in itertools.product(range(-bound, bound + 1), repeat=n):
        if not any(vec):
            continue
        # sign-normalize: first nonzero entry positive
        first = next(x for x in vec if x)
        if first < 0:
            continue
        if not system.mode.is_root:
            # scaling is irrelevant to exact isotropy: keep primitive vectors
            g = 0
            for x in vec:
                g = math.gcd(g, x)
            if g > 1:
                continue
        cands.append(vec)
    cands.sort()
    return cands


def _max_isotropic_search(system: ExponentSystem, bound: int, budget: int) -> tuple[int, tuple[Vector, ...]]:
    system.validate()
    n = system.n
    cands = _candidate_vectors(system, bound)
    pair_ok: dict[tuple[int, int], bool] = {}

    def compatible(i: int, j: int) -> bool:
        key = (i, j) if i < j else (j, i)
        v = pair_ok.get(key)
        if v is None:
            v = system.pairing_trivial(system.pairing(cands[key[0]], cands[key[1]]))
            pair_ok[key] = v
        return v

    best_rank = 0
    best_basis: tuple[Vector, ...] = ()
    nodes = 0

    def extend(chosen: list[int], echelon: list[list[int]]) -> bool:
        nonlocal best_rank, best_basis, nodes
        if len(chosen) > best_rank:
            best_rank = len(chosen)
            best_basis = tuple(cands[i] for i in chosen)
            if best_rank == n:
                return True
        start = chosen[-1] + 1 if chosen else 0
        for idx in range(start, len(cands)):
            nodes += 1
            if nodes > budget:
                raise SearchSpaceTooLarge(f"isotropic-set search exceeded {budget} nodes")
            if len(chosen) + (len(cands) - idx) <= best_rank:
                break
            if any(not compatible(i, idx) for i in chosen):
                continue
            reduced = _reduce_against(echelon, list(cands[idx]))
            if reduced is None:
                continue
            if extend(chosen + [idx], echelon + [reduced]):
                return True
        return False

    extend([], [])
    return best_rank, best_basis


def _reduce_against(echelon: list[list[int]], v: list[int]) -> list[int] | None:
    """Fraction-free reduction of v against echelon rows; None if dependent."""
    for row in echelon:
        lead = next(i for i, x in enumerate(row) if x)
        if v[lead]:
            p, c = row[lead], v[lead]
            g = math.gcd(p, c)
            v = [(p // g) * x - (c // g) * y for x, y in zip(v, row)]
    if not any(v):
        return None
    g = 0
    for x in v:
        g = math.gcd(g, x)
    v = [x // g for x in v]
    return v
