"""Global heights over Q and Q(i), subspaces, duality, product formula.

Two height functions are provided: the sup-norm height H and the
Euclidean-at-infinity height Hcal.  Both are projective (invariant under
nonzero scaling) and are carried exactly through their *squares*, which
are rational numbers for every vector over Q or Q(i).  Square roots are
materialized only for display.

The height of a subspace is Hcal of its primitive Grassmann coordinate
vector; by Brill-Gordan duality it can be computed from a basis matrix
or from a constraint matrix with identical results.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple, Union

from . import linalg
from .errors import InputError, RankError
from .fields import QI, FieldDescriptor, Q
from .gaussian import (
    GaussianRational,
    canonical_unit,
    gauss_gcd_many,
    gaussian_factor,
)
from .linalg import GrassmannVector, ZI, ZZ

Scalar = Union[int, Fraction, GaussianRational]
Vector = Tuple[Scalar, ...]


# -- height values -------------------------------------------------------


@dataclass(frozen=True, order=True)
class HeightValue:
    """An exact height, stored as its square (a positive rational)."""

    sq: Fraction

    def __post_init__(self):
        if self.sq <= 0:
            raise InputError("height squares must be positive")

    def display(self, digits: int = 12) -> str:
        """Decimal approximation of sqrt(sq), for reports only."""
        with decimal.localcontext() as ctx:
            ctx.prec = digits + 5
            v = (
                decimal.Decimal(self.sq.numerator)
                / decimal.Decimal(self.sq.denominator)
            ).sqrt()
            return str(+decimal.Decimal(v).normalize())

    def __repr__(self) -> str:
        return f"HeightValue(sq={self.sq})"


# -- vector normalization -------------------------------------------------


def _as_q_vector(x: Sequence) -> List[Fraction]:
    out = []
    for e in x:
        if isinstance(e, GaussianRational):
            raise InputError("Gaussian entry in a vector over Q")
        out.append(Fraction(e))
    return out


def _as_qi_vector(x: Sequence) -> List[GaussianRational]:
    out = []
    for e in x:
        if isinstance(e, GaussianRational):
            out.append(e)
        else:
            out.append(GaussianRational(Fraction(e), 0))
    return out


def _lcm(a: int, b: int) -> int:
    import math

    return a * b // math.gcd(a, b)


def canonical_representative(x: Sequence, field: FieldDescriptor) -> Vector:
    """Canonical integral representative of the projective class of x.

    Denominators are cleared, the content gcd is divided out, and the
    first nonzero coordinate is normalized (positive over Q; half-open
    first quadrant over Q(i)).
    """
    field.require_exact()
    if field.label == "Q":
        v = _as_q_vector(x)
        if all(e == 0 for e in v):
            raise InputError("zero vector has no representative")
        den = 1
        for e in v:
            den = _lcm(den, e.denominator)
        ints = [int(e * den) for e in v]
        g = ZZ.gcd_many(ints)
        ints = [a // g for a in ints]
        first = next(a for a in ints if a != 0)
        if first < 0:
            ints = [-a for a in ints]
        return tuple(ints)
    v = _as_qi_vector(x)
    if all(e.is_zero() for e in v):
        raise InputError("zero vector has no representative")
    den = 1
    for e in v:
        den = _lcm(_lcm(den, e.re.denominator), e.im.denominator)
    ints = [e * den for e in v]
    g = gauss_gcd_many(ints)
    ints = [e / g for e in ints]
    first = next(e for e in ints if not e.is_zero())
    u = canonical_unit(first)
    return tuple(u * e for e in ints)


def _scalar_sort_key(e: Scalar):
    if isinstance(e, GaussianRational):
        re, im = e.re, e.im
        if re > 0 and im >= 0:
            quad = 0
        elif im > 0:
            quad = 1
        elif re < 0:
            quad = 2
        else:
            quad = 3 if (re > 0 or im < 0) else 0
        return (e.norm(), quad, -re, -im)
    e = Fraction(e)
    return (e * e, 0 if e >= 0 else 1, -e, 0)


def vector_sort_key(x: Sequence):
    """Deterministic order on canonical representatives: coordinatewise by
    magnitude first, preferring the canonical-quadrant value on ties."""
    return tuple(_scalar_sort_key(e) for e in x)


# -- the two global heights ------------------------------------------------


def _height_sq(x: Sequence, field: FieldDescriptor, euclidean: bool) -> Fraction:
    rep = canonical_representative(x, field)
    if field.label == "Q":
        sqs = [Fraction(e) ** 2 for e in rep]
    else:
        sqs = [e.norm() for e in rep]
    return sum(sqs, Fraction(0)) if euclidean else max(sqs)


def height_H(x: Sequence, field: FieldDescriptor) -> HeightValue:
    """Sup-norm global height H(x), as an exact square."""
    return HeightValue(_height_sq(x, field, euclidean=False))


def height_Hcal(x: Sequence, field: FieldDescriptor) -> HeightValue:
    """Euclidean-at-infinity global height Hcal(x), as an exact square."""
    return HeightValue(_height_sq(x, field, euclidean=True))


# -- product formula --------------------------------------------------------


def product_formula_check(a, field: FieldDescriptor) -> Fraction:
    """Product of all local absolute values of a nonzero element.

    Local factors are computed independently (prime factorization for the
    finite places, the archimedean modulus for the infinite ones); the
    contract is that the returned rational equals exactly 1.  For Q(i)
    the *squared* product is returned, which is again rational.
    """
    from sympy import factorint

    field.require_exact()
    if field.label == "Q":
        a = Fraction(a)
        if a == 0:
            raise InputError("product formula needs a nonzero element")
        finite = Fraction(1)
        for p, e in factorint(a.numerator).items():
            finite /= Fraction(p) ** e
        for p, e in factorint(a.denominator).items():
            finite *= Fraction(p) ** e
        return finite * abs(a)
    if not isinstance(a, GaussianRational):
        a = GaussianRational(Fraction(a), 0)
    if a.is_zero():
        raise InputError("product formula needs a nonzero element")
    den = _lcm(a.re.denominator, a.im.denominator)
    num = a * den
    finite_sq = Fraction(1)
    for z, sgn in ((num, -1), (GaussianRational(den, 0), +1)):
        _, factors = gaussian_factor(z)
        for pi, e in factors.items():
            finite_sq *= Fraction(int(pi.norm())) ** (sgn * e)
    return finite_sq * a.norm()


# -- subspaces ---------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace of K^N in canonical form.

    `basis` holds the canonical saturated integral basis as a tuple of
    column vectors (each of length `ambient`); `gr` is the primitive
    Grassmann vector of that basis and `height` its Hcal value.
    """

    field: FieldDescriptor
    ambient: int
    dim: int
    basis: Tuple[Vector, ...]
    gr: GrassmannVector
    height: HeightValue

    @property
    def height_sq(self) -> Fraction:
        return self.height.sq

    def basis_matrix(self) -> List[list]:
        """The N x dim matrix with basis vectors as columns (list of rows)."""
        return linalg.from_columns([list(v) for v in self.basis])

    def contains(self, x: Sequence) -> bool:
        vec = _coerce_vector(x, self.field)
        if len(vec) != self.ambient:
            raise InputError("vector/subspace dimension mismatch")
        return linalg.solve_field(self.basis_matrix(), vec) is not None

    def coefficients_of(self, x: Sequence):
        """Coordinates of x in the canonical basis, or None if x not in V."""
        vec = _coerce_vector(x, self.field)
        return linalg.solve_field(self.basis_matrix(), vec)


def _coerce_vector(x: Sequence, field: FieldDescriptor) -> list:
    if field.label == "Q":
        return _as_q_vector(x)
    return _as_qi_vector(x)


def _integralize_columns(vectors: Sequence[Sequence], field: FieldDescriptor):
    """Scale each spanning vector to an integral one (span is unchanged)."""
    cols = []
    for v in vectors:
        vec = _coerce_vector(v, field)
        if field.label == "Q":
            den = 1
            for e in vec:
                den = _lcm(den, e.denominator)
            cols.append([int(e * den) for e in vec])
        else:
            den = 1
            for e in vec:
                den = _lcm(_lcm(den, e.re.denominator), e.im.denominator)
            cols.append([e * den for e in vec])
    return cols


def subspace_from_basis(field: FieldDescriptor, vectors: Sequence[Sequence]) -> Subspace:
    """Build the canonical Subspace spanned by the given vectors.

    Dependent spanning sets are tolerated (the dimension is recomputed);
    a zero span is an error.
    """
    field.require_exact()
    if not vectors:
        raise InputError("empty spanning set")
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise InputError("spanning vectors of unequal length")
    cols = _integralize_columns(vectors, field)
    ring = ZZ if field.label == "Q" else ZI
    B = linalg.from_columns(cols)
    sat = linalg.saturate(B, ring)
    basis_cols = linalg.columns(sat)
    gr, content = linalg.maximal_minors(sat)
    if field.label == "Q":
        if content != 1:  # pragma: no cover - saturation forces primitivity
            raise AssertionError("saturated basis must have primitive minors")
        hsq = sum(Fraction(c) ** 2 for c in gr.coords)
    else:
        if content.norm() != 1:  # pragma: no cover
            raise AssertionError("saturated basis must have primitive minors")
        hsq = sum((c.norm() for c in gr.coords), Fraction(0))
    return Subspace(
        field=field,
        ambient=n,
        dim=len(basis_cols),
        basis=tuple(tuple(c) for c in basis_cols),
        gr=gr,
        height=HeightValue(hsq),
    )


def subspace_from_constraints(field: FieldDescriptor, rows: Sequence[Sequence]) -> Subspace:
    """The nullspace {x : A x = 0} of a constraint matrix, as a Subspace."""
    field.require_exact()
    if not rows:
        raise InputError("empty constraint matrix")
    cols = _integralize_columns(rows, field)  # scale constraint rows
    ring = ZZ if field.label == "Q" else ZI
    A = cols  # each scaled row is a constraint
    ker = linalg.kernel(A, ring)
    if not ker:
        raise RankError("constraints define the zero subspace")
    return subspace_from_basis(field, [tuple(c) for c in ker])


def subspace_height(V: Subspace) -> HeightValue:
    """Hcal(V): the common Grassmann height of any basis of V."""
    return V.height


def full_space(field: FieldDescriptor, n: int) -> Subspace:
    one = 1 if field.label == "Q" else GaussianRational(1, 0)
    zero = 0 if field.label == "Q" else GaussianRational(0, 0)
    vecs = [[one if i == j else zero for i in range(n)] for j in range(n)]
    return subspace_from_basis(field, vecs)


def intersect_subspaces(V: Subspace, W: Subspace) -> Optional[Subspace]:
    """V ∩ W as a Subspace, or None when the intersection is zero."""
    if V.field != W.field or V.ambient != W.ambient:
        raise InputError("subspaces live in different spaces")
    Vc = [list(map(_field_elt(V.field), v)) for v in V.basis]
    Wc = [list(map(_field_elt(V.field), w)) for w in W.basis]
    M = linalg.from_columns(Vc + [[-e for e in w] for w in Wc])
    ker = linalg.kernel_field(M)
    if not ker:
        return None
    vecs = []
    for t in ker:
        coeffs = t[: len(Vc)]
        vec = [sum((c * v[i] for c, v in zip(coeffs, Vc)), coeffs[0] * 0) for i in range(V.ambient)]
        vecs.append(vec)
    return subspace_from_basis(V.field, vecs)


def _field_elt(field: FieldDescriptor):
    if field.label == "Q":
        return Fraction
    return lambda e: e if isinstance(e, GaussianRational) else GaussianRational(Fraction(e), 0)


# -- Brill-Gordan duality -----------------------------------------------------


@dataclass(frozen=True)
class DualityReport:
    gamma_found: bool
    gamma: object
    height_sq_basis: Fraction
    height_sq_constraints: Fraction


def check_duality(X_rows: Sequence[Sequence], A_rows: Sequence[Sequence], field: FieldDescriptor) -> DualityReport:
    """Verify the minor-by-minor duality between a basis matrix X of V and
    a constraint matrix A with A X = 0.

    A single scalar gamma must satisfy det(X_I) = (-1)^{eps(I')} * gamma *
    det(A restricted to columns I') for every row set I, where eps(I') is
    the sum of the (1-based) indices in the complement I'.  The Grassmann
    heights of X and A must agree exactly.
    """
    field.require_exact()
    X = [list(map(_field_elt(field), row)) for row in X_rows]
    A = [list(map(_field_elt(field), row)) for row in A_rows]
    n, j = linalg.dims(X)
    an, ak = linalg.dims(A)
    if ak != n or an != n - j:
        raise InputError("constraint matrix has the wrong shape")
    prod = linalg.mat_mul(A, X)
    zero = prod[0][0] * 0 if prod else 0
    if any(e != zero for row in prod for e in row):
        raise InputError("not a dual pair")
    if linalg.rank_field(X) != j or (n > j and linalg.rank_field(A) != n - j):
        raise RankError("dual pair matrices must have full rank")

    gamma = None
    minors_x = []
    minors_a = []
    for rows in combinations(range(n), j):
        comp = tuple(i for i in range(n) if i not in rows)
        det_x = linalg.det_field([X[i] for i in rows])
        det_a = linalg.det_field([[A[r][c] for c in comp] for r in range(n - j)])
        minors_x.append(det_x)
        minors_a.append(det_a)
        eps = sum(i + 1 for i in comp)
        signed = det_a if eps % 2 == 0 else -det_a
        if gamma is None and signed != zero:
            gamma = det_x / signed
    if gamma is None:
        raise RankError("constraint matrix has no nonzero maximal minor")
    ok = True
    for (rows, det_x, det_a) in zip(combinations(range(n), j), minors_x, minors_a):
        comp = tuple(i for i in range(n) if i not in rows)
        eps = sum(i + 1 for i in comp)
        signed = det_a if eps % 2 == 0 else -det_a
        if det_x != gamma * signed:
            ok = False
            break
    hx = height_Hcal(minors_x, field).sq
    ha = height_Hcal(minors_a, field).sq
    if hx != ha:
        ok = False
    return DualityReport(ok, gamma if ok else None, hx, ha)
