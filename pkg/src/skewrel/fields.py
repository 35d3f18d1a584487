"""Exact field scalars: arbitrary-precision rationals and prime fields GF(p).

Every coefficient in the repository is a Scalar; there is no floating point
anywhere. Rationals ride on fractions.Fraction (always in lowest terms with
positive denominator), prime-field values are residues in [0, p).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, StructureError

RATIONALS = "rationals"
PRIME_FIELD = "prime-field"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.modulus is not None:
                raise StructureError("rationals take no modulus")
        elif self.kind == PRIME_FIELD:
            if self.modulus is None or not _is_prime(self.modulus):
                raise StructureError(
                    "prime-field modulus must be prime, got %r" % (self.modulus,))
        else:
            raise StructureError("unknown field kind %r" % (self.kind,))

    def zero(self) -> "Scalar":
        return Scalar(self, 0 if self.kind == PRIME_FIELD else Fraction(0))

    def one(self) -> "Scalar":
        return Scalar(self, 1 if self.kind == PRIME_FIELD else Fraction(1))

    def from_int(self, n: int) -> "Scalar":
        if self.kind == PRIME_FIELD:
            return Scalar(self, n % self.modulus)
        return Scalar(self, Fraction(n))

    def from_fraction(self, num: int, den: int) -> "Scalar":
        if den == 0:
            raise PreconditionError("zero denominator")
        if self.kind == PRIME_FIELD:
            inv = pow(den % self.modulus, -1, self.modulus)
            return Scalar(self, (num * inv) % self.modulus)
        return Scalar(self, Fraction(num, den))

    def parse(self, text: str) -> "Scalar":
        """Parse "p/q" or "n" (rationals) / "k" (prime field)."""
        text = text.strip()
        try:
            if "/" in text:
                num_s, den_s = text.split("/", 1)
                return self.from_fraction(int(num_s), int(den_s))
            return self.from_int(int(text))
        except ValueError as exc:
            raise StructureError("bad scalar literal %r" % (text,)) from exc


@dataclass(frozen=True)
class Scalar:
    field: FieldSpec
    value: object  # Fraction (rationals) or int residue (prime field)

    def _check(self, other: "Scalar"):
        if self.field != other.field:
            raise PreconditionError("scalars from different fields")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        v = self.value + other.value
        if self.field.kind == PRIME_FIELD:
            v %= self.field.modulus
        return Scalar(self.field, v)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        v = self.value * other.value
        if self.field.kind == PRIME_FIELD:
            v %= self.field.modulus
        return Scalar(self.field, v)

    def __neg__(self) -> "Scalar":
        v = -self.value
        if self.field.kind == PRIME_FIELD:
            v %= self.field.modulus
        return Scalar(self.field, v)

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise PreconditionError("zero has no inverse")
        if self.field.kind == PRIME_FIELD:
            return Scalar(self.field, pow(self.value, -1, self.field.modulus))
        return Scalar(self.field, 1 / self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def is_one(self) -> bool:
        return self.value == 1

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return "Scalar(%s)" % self
