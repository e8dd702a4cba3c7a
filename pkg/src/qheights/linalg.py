"""Exact integer / Gaussian-integer / rational linear algebra.

Matrices are lists of rows.  Basis matrices keep basis vectors in their
*columns*, matching the convention used throughout the package.

The echelon routines work over any Euclidean ring presented as a small
ring object (`ZZ` for the integers, `ZI` for the Gaussian integers).

Column HNF convention (documented contract): H = M * U with U unimodular;
nonzero columns come first, each with its topmost nonzero entry as the
pivot; pivot rows strictly increase column by column; pivots are
canonical (positive over Z, first-quadrant over Z[i]); entries to the
left of a pivot in its row are reduced modulo the pivot.  For a square
nonsingular M this makes H lower triangular with positive diagonal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Tuple

from .errors import InputError, RankError
from .gaussian import GaussianRational, canonical_unit, gauss_divmod, gauss_gcd

Matrix = List[list]


# -- ring objects ------------------------------------------------------------


class _IntRing:
    label = "Z"
    zero = 0
    one = 1

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    @staticmethod
    def divmod(a, b):
        return divmod(a, b)

    @staticmethod
    def canonical_unit(a):
        # unit u with u*a canonical (positive)
        return -1 if a < 0 else 1

    @staticmethod
    def norm_key(a) -> int:
        return abs(a)

    @staticmethod
    def gcd_many(items) -> int:
        g = 0
        for a in items:
            g = math.gcd(g, a)
        return g


class _GaussRing:
    label = "Z[i]"
    zero = GaussianRational(0, 0)
    one = GaussianRational(1, 0)

    @staticmethod
    def is_zero(a: GaussianRational) -> bool:
        return a.is_zero()

    @staticmethod
    def divmod(a, b):
        return gauss_divmod(a, b)

    @staticmethod
    def canonical_unit(a):
        return canonical_unit(a)

    @staticmethod
    def norm_key(a) -> Fraction:
        return a.norm()

    @staticmethod
    def gcd_many(items) -> GaussianRational:
        from .gaussian import gauss_gcd_many

        return gauss_gcd_many(items)


ZZ = _IntRing()
ZI = _GaussRing()


# -- generic shape helpers ---------------------------------------------------


def dims(M: Sequence[Sequence]) -> Tuple[int, int]:
    r = len(M)
    c = len(M[0]) if r else 0
    if any(len(row) != c for row in M):
        raise InputError("ragged matrix")
    return r, c


def transpose(M: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*M)]


def identity(n: int, one=1, zero=0) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def from_columns(cols: Sequence[Sequence]) -> Matrix:
    return transpose(cols)


def columns(M: Sequence[Sequence]) -> List[list]:
    return [list(col) for col in zip(*M)]


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    n, k = dims(A)
    k2, m = dims(B)
    if k != k2:
        raise InputError("matrix product shape mismatch")
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_vec(A: Sequence[Sequence], v: Sequence) -> list:
    return [sum(a * b for a, b in zip(row, v)) for row in A]


def scale_vector(c, v: Sequence) -> list:
    return [c * x for x in v]


# -- column Hermite normal form ----------------------------------------------


def hnf_with_transform(M: Sequence[Sequence], ring=ZZ) -> Tuple[Matrix, Matrix, int]:
    """Column HNF of M over the given Euclidean ring.

    Returns (H, U, rank) with M*U = H, U unimodular, and H in the column
    echelon shape documented at module level.  Zero columns of H sit at
    positions >= rank, so columns rank..end of U span ker(M).
    """
    nrows, ncols = dims(M)
    H = [list(row) for row in M]
    U = identity(ncols, one=ring.one, zero=ring.zero)

    def col_addmul(dst: int, src: int, q) -> None:
        # column_dst -= q * column_src, applied to H and U alike
        for T in (H, U):
            for row in T:
                row[dst] = row[dst] - q * row[src]

    def col_swap(a: int, b: int) -> None:
        for T in (H, U):
            for row in T:
                row[a], row[b] = row[b], row[a]

    def col_scale_unit(j: int, u) -> None:
        for T in (H, U):
            for row in T:
                row[j] = u * row[j]

    piv = 0
    for r in range(nrows):
        if piv >= ncols:
            break
        # Euclidean descent: leave at most one nonzero entry in row r
        # among columns piv..ncols-1.
        while True:
            live = [j for j in range(piv, ncols) if not ring.is_zero(H[r][j])]
            if len(live) <= 1:
                break
            jmin = min(live, key=lambda j: ring.norm_key(H[r][j]))
            for j in live:
                if j == jmin:
                    continue
                q, _ = ring.divmod(H[r][j], H[r][jmin])
                if not ring.is_zero(q):
                    col_addmul(j, jmin, q)
        live = [j for j in range(piv, ncols) if not ring.is_zero(H[r][j])]
        if not live:
            continue
        j = live[0]
        if j != piv:
            col_swap(j, piv)
        u = ring.canonical_unit(H[r][piv])
        if u != ring.one:
            col_scale_unit(piv, u)
        # reduce entries left of the pivot in its row
        for j in range(piv):
            q, _ = ring.divmod(H[r][j], H[r][piv])
            if not ring.is_zero(q):
                col_addmul(j, piv, q)
        piv += 1
    return H, U, piv


def hnf(M: Sequence[Sequence]) -> Tuple[Matrix, Matrix]:
    """Column HNF of a nonzero integer matrix; returns (H, U) with M*U = H."""
    H, U, rank = hnf_with_transform(M, ZZ)
    if rank == 0:
        raise RankError("rank zero")
    return H, U


def kernel(M: Sequence[Sequence], ring=ZZ) -> List[list]:
    """Basis (list of columns) of {x : M x = 0} over the ring.

    The result is a saturated basis: every ring solution is a ring
    combination of the returned columns.
    """
    _, U, rank = hnf_with_transform(M, ring)
    cols = columns(U)
    return cols[rank:]


def saturate(B: Sequence[Sequence], ring=ZZ) -> Matrix:
    """Basis of the pure (saturated) lattice span_K(B) ∩ ring^N.

    B is an N x k matrix whose columns span the subspace; the result is
    an N x r matrix in column HNF, r = rank(B).  Duplicate or dependent
    columns are tolerated.
    """
    nrows, _ = dims(B)
    _, _, rank = hnf_with_transform(B, ring)
    if rank == 0:
        raise RankError("zero span cannot be saturated")
    ker_cols = kernel(transpose(B), ring)
    if not ker_cols:
        return identity(nrows, one=ring.one, zero=ring.zero)
    sat_cols = kernel(transpose(from_columns(ker_cols)), ring)
    S = from_columns(sat_cols)
    H, _, r2 = hnf_with_transform(S, ring)
    if r2 != rank:  # pragma: no cover - double-kernel rank is forced
        raise AssertionError("saturation rank mismatch")
    return [row[:r2] for row in H]


# -- determinants -------------------------------------------------------------


def det_int(M: Sequence[Sequence]) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    n, c = dims(M)
    if n != c:
        raise InputError("determinant needs a square matrix")
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def det_field(M: Sequence[Sequence]):
    """Exact determinant over a field (Fraction or GaussianRational entries)."""
    n, c = dims(M)
    if n != c:
        raise InputError("determinant needs a square matrix")
    if n == 0:
        return 1
    A = [list(row) for row in M]
    zero = A[0][0] * 0
    det = zero + 1
    for k in range(n):
        pivot_row = None
        for i in range(k, n):
            if A[i][k] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            return zero
        if pivot_row != k:
            A[k], A[pivot_row] = A[pivot_row], A[k]
            det = -det
        p = A[k][k]
        det = det * p
        for i in range(k + 1, n):
            if A[i][k] != zero:
                f = A[i][k] / p
                A[i] = [a - f * b for a, b in zip(A[i], A[k])]
    return det


def det_gauss_int(M: Sequence[Sequence]) -> GaussianRational:
    """Determinant of a square Gaussian-integer matrix."""
    d = det_field(M)
    if isinstance(d, int):
        return GaussianRational(d, 0)
    return d


# -- field elimination: rank / solve -----------------------------------------


def _field_zero(M: Sequence[Sequence]):
    return M[0][0] * 0


def rank_field(M: Sequence[Sequence]) -> int:
    nrows, ncols = dims(M)
    A = [list(row) for row in M]
    zero = _field_zero(M)
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, nrows):
            if A[i][col] != zero:
                pivot = i
                break
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        p = A[rank][col]
        for i in range(rank + 1, nrows):
            if A[i][col] != zero:
                f = A[i][col] / p
                A[i] = [a - f * b for a, b in zip(A[i], A[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def solve_field(A: Sequence[Sequence], b: Sequence):
    """One exact solution x of A x = b over the entry field, or None.

    A is n x m (columns may outnumber rows or vice versa); x has length m.
    """
    nrows, ncols = dims(A)
    if len(b) != nrows:
        raise InputError("solve: dimension mismatch")
    M = [list(row) + [bv] for row, bv in zip(A, b)]
    zero = M[0][0] * 0
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if M[i][col] != zero:
                pivot = i
                break
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        p = M[r][col]
        M[r] = [a / p for a in M[r]]
        for i in range(nrows):
            if i != r and M[i][col] != zero:
                f = M[i][col]
                M[i] = [a - f * b2 for a, b2 in zip(M[i], M[r])]
        pivots.append(col)
        r += 1
    for i in range(r, nrows):
        if M[i][ncols] != zero:
            return None
    x = [zero for _ in range(ncols)]
    for row_idx, col in enumerate(pivots):
        x[col] = M[row_idx][ncols]
    return x


# -- Grassmann coordinates -----------------------------------------------------


@dataclass(frozen=True)
class GrassmannVector:
    """Primitive vector of maximal minors of a basis matrix.

    Coordinates follow the lexicographic order of the row index sets and
    are normalized so content is trivial and the first nonzero coordinate
    is canonical (positive over Z; half-open first quadrant over Z[i]).
    """

    ambient: int
    dim: int
    coords: tuple

    def index_sets(self) -> List[Tuple[int, ...]]:
        return list(combinations(range(self.ambient), self.dim))

    def __len__(self) -> int:
        return len(self.coords)


def _is_gauss_matrix(X: Sequence[Sequence]) -> bool:
    return any(isinstance(e, GaussianRational) for row in X for e in row)


def raw_maximal_minors(X: Sequence[Sequence]) -> list:
    """All J x J minors of an N x J matrix, in lex order of row sets."""
    nrows, ncols = dims(X)
    if ncols > nrows:
        raise InputError("maximal minors need at least as many rows as columns")
    gauss_mode = _is_gauss_matrix(X)
    out = []
    for rows in combinations(range(nrows), ncols):
        sub = [X[i] for i in rows]
        out.append(det_gauss_int(sub) if gauss_mode else det_int(sub))
    return out


def maximal_minors(X: Sequence[Sequence]) -> Tuple[GrassmannVector, object]:
    """Primitive Grassmann vector of a full-column-rank integral matrix.

    Returns (gr, content) where content is the canonical gcd of the raw
    minors; the raw minor vector equals a unit times content * gr.coords.
    """
    nrows, ncols = dims(X)
    raw = raw_maximal_minors(X)
    gauss_mode = _is_gauss_matrix(X)
    if gauss_mode:
        g = ZI.gcd_many(raw)
        if g.is_zero():
            raise RankError("degenerate basis")
        red = [z / g for z in raw]
        first = next(z for z in red if not z.is_zero())
        u = canonical_unit(first)
        coords = tuple(u * z for z in red)
        content = g
    else:
        g = ZZ.gcd_many(raw)
        if g == 0:
            raise RankError("degenerate basis")
        red = [a // g for a in raw]
        first = next(a for a in red if a != 0)
        if first < 0:
            red = [-a for a in red]
        coords = tuple(red)
        content = g
    return GrassmannVector(nrows, ncols, coords), content


def gram_matrix(B: Sequence[Sequence]) -> Matrix:
    return mat_mul(transpose(B), B)


def gram_det(B: Sequence[Sequence]) -> Fraction:
    """det(B^T B) of a full-column-rank rational matrix, exactly."""
    _, ncols = dims(B)
    G = gram_matrix([[Fraction(e) for e in row] for row in B])
    d = det_field(G) if ncols else Fraction(1)
    d = Fraction(d)
    if d == 0:
        raise RankError("rank-deficient matrix has no Gram determinant")
    return d


def is_unimodular(U: Sequence[Sequence], ring=ZZ) -> bool:
    if ring is ZZ:
        return abs(det_int(U)) == 1
    return det_gauss_int(U).norm() == 1
