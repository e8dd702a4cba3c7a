"""Number-field descriptors driving exact arithmetic and bound evaluation.

Exact point arithmetic is supported for Q and Q(i) only.  A SYMBOLIC
descriptor carries arbitrary invariants (d, r1, r2, |disc|) so the bound
formulas can be evaluated for other fields, but every exact operation
rejects it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, UnsupportedFieldError


@dataclass(frozen=True)
class FieldDescriptor:
    label: str  # "Q", "QI" or "SYMBOLIC"
    d: int
    r1: int
    r2: int
    abs_disc: Fraction

    def __post_init__(self):
        if self.d != self.r1 + 2 * self.r2:
            raise InputError("degree must equal r1 + 2*r2")
        if self.d < 1 or self.r1 < 0 or self.r2 < 0:
            raise InputError("invalid field signature")
        if self.abs_disc <= 0:
            raise InputError("absolute discriminant must be positive")

    @property
    def is_exact(self) -> bool:
        return self.label in ("Q", "QI")

    def require_exact(self) -> None:
        if not self.is_exact:
            raise UnsupportedFieldError(
                "exact arithmetic unsupported for symbolic fields"
            )

    def __repr__(self) -> str:
        if self.label in ("Q", "QI"):
            return self.label
        return (
            f"SYMBOLIC(d={self.d}, r1={self.r1}, r2={self.r2}, "
            f"|disc|={self.abs_disc})"
        )


Q = FieldDescriptor("Q", 1, 1, 0, Fraction(1))
QI = FieldDescriptor("QI", 2, 0, 1, Fraction(4))


def symbolic_field(d: int, r1: int, r2: int, abs_disc) -> FieldDescriptor:
    return FieldDescriptor("SYMBOLIC", d, r1, r2, Fraction(abs_disc))
