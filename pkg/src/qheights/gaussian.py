"""Exact arithmetic in Q(i): Gaussian rationals, Euclidean gcd, units,
and Gaussian prime factorization.

Elements are pairs of `fractions.Fraction`.  A *Gaussian integer* is an
element whose real and imaginary parts are integers; only those support
`divmod`-style Euclidean division and gcd.  Canonical associates live in
the half-open first quadrant {re > 0, im >= 0}, so every nonzero element
has exactly one canonical unit multiple among z, iz, -z, -iz.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple, Union

from .errors import InputError

Rat = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise InputError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class GaussianRational:
    """An element re + im*i of Q(i), both parts exact rationals."""

    re: Fraction
    im: Fraction

    def __init__(self, re: Rat = 0, im: Rat = 0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_integral(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def is_unit(self) -> bool:
        return self.norm() == 1

    # -- basic algebra ---------------------------------------------------

    def norm(self) -> Fraction:
        """Field norm N(z) = re^2 + im^2 (equals |z|^2)."""
        return self.re * self.re + self.im * self.im

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def times_i(self) -> "GaussianRational":
        return GaussianRational(-self.im, self.re)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        c = self * o.conj()
        return GaussianRational(c.re / n, c.im / n)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)
UNITS = (ONE, I, -ONE, -I)


def gauss(re: Rat, im: Rat = 0) -> GaussianRational:
    return GaussianRational(re, im)


def _round_nearest(num: int, den: int) -> int:
    """floor(num/den + 1/2) for den > 0; deterministic at ties."""
    return (2 * num + den) // (2 * den)


def gauss_divmod(a: GaussianRational, b: GaussianRational) -> Tuple[GaussianRational, GaussianRational]:
    """Euclidean division of Gaussian integers: a = q*b + r, N(r) <= N(b)/2."""
    if not (a.is_integral() and b.is_integral()):
        raise InputError("gauss_divmod needs Gaussian integers")
    if b.is_zero():
        raise ZeroDivisionError("gauss_divmod by zero")
    t = a * b.conj()
    n = int(b.norm())
    q = GaussianRational(_round_nearest(int(t.re), n), _round_nearest(int(t.im), n))
    return q, a - q * b


def canonical_unit(z: GaussianRational) -> GaussianRational:
    """The unit u with u*z in the half-open first quadrant {re > 0, im >= 0}."""
    if z.is_zero():
        raise InputError("zero has no canonical unit")
    for u in UNITS:
        w = u * z
        if w.re > 0 and w.im >= 0:
            return u
    raise AssertionError("unit quadrant search cannot fail")  # pragma: no cover


def canonicalize(z: GaussianRational) -> GaussianRational:
    """The canonical associate of z (z itself if zero)."""
    if z.is_zero():
        return ZERO
    return canonical_unit(z) * z


def gauss_gcd(a: GaussianRational, b: GaussianRational) -> GaussianRational:
    """Canonical gcd of two Gaussian integers via the Euclidean algorithm."""
    if not (a.is_integral() and b.is_integral()):
        raise InputError("gauss_gcd needs Gaussian integers")
    while not b.is_zero():
        _, r = gauss_divmod(a, b)
        a, b = b, r
    return canonicalize(a)


def gauss_gcd_many(items: Iterable[GaussianRational]) -> GaussianRational:
    g = ZERO
    for z in items:
        g = gauss_gcd(g, z)
        if g.norm() == 1:
            return canonicalize(g)
    return g


# -- Gaussian prime factorization ---------------------------------------


def _sqrt_minus_one_mod(p: int) -> int:
    from sympy.ntheory.residue_ntheory import sqrt_mod

    c = sqrt_mod(-1, p)
    if c is None:  # pragma: no cover - p = 1 mod 4 always has a root
        raise AssertionError(f"no sqrt of -1 mod {p}")
    return int(c)


def gaussian_factor(z: GaussianRational) -> Tuple[GaussianRational, Dict[GaussianRational, int]]:
    """Factor a nonzero Gaussian integer into canonical primes.

    Returns (unit, {prime: exponent}) with z = unit * prod(prime^exponent)
    and every prime a canonical associate.
    """
    from sympy import factorint

    if not z.is_integral():
        raise InputError("gaussian_factor needs a Gaussian integer")
    if z.is_zero():
        raise InputError("cannot factor zero")
    factors: Dict[GaussianRational, int] = {}
    w = z
    for p, _ in sorted(factorint(int(z.norm())).items()):
        if p == 2:
            candidates = [canonicalize(GaussianRational(1, 1))]
        elif p % 4 == 3:
            candidates = [GaussianRational(p, 0)]
        else:
            c = _sqrt_minus_one_mod(p)
            pi = gauss_gcd(GaussianRational(p, 0), GaussianRational(c, 1))
            candidates = [pi, canonicalize(pi.conj())]
        for pi in candidates:
            e = 0
            while True:
                q, r = gauss_divmod(w, pi)
                if not r.is_zero():
                    break
                w = q
                e += 1
            if e:
                factors[pi] = factors.get(pi, 0) + e
    if w.norm() != 1:  # pragma: no cover - guards factorization logic
        raise AssertionError("non-unit cofactor after Gaussian factorization")
    return w, factors
