"""Exact coefficient arithmetic over the rationals and over prime fields.

Rational values are `fractions.Fraction` (always in lowest terms, positive
denominator).  Prime-field values are canonical residues in [0, p).  No
floating point is used anywhere in this package.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldMismatchError(ValueError):
    """Raised when two scalars from different fields are combined."""


RATIONALS = "rationals"
PRIME_FIELD = "prime-field"

# raw scalar values: Fraction over the rationals, int residue over F_p
Raw = Fraction | int


def _is_prime(p: int) -> bool:
    # deterministic Miller-Rabin, exact for all 64-bit inputs
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The working coefficient field: the rationals, or F_p for a prime p."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p is not None:
                raise ValueError("rationals carry no modulus")
        elif self.kind == PRIME_FIELD:
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"modulus {self.p!r} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONALS

    # -- raw-value arithmetic (used by the linear algebra / polynomial layers)

    def canon(self, value) -> Raw:
        """Canonical raw form: reduced Fraction, or residue in [0, p)."""
        if self.is_rational:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator not invertible mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def zero(self) -> Raw:
        return Fraction(0) if self.is_rational else 0

    def one(self) -> Raw:
        return Fraction(1) if self.is_rational else 1

    def radd(self, a: Raw, b: Raw) -> Raw:
        return a + b if self.is_rational else (a + b) % self.p

    def rsub(self, a: Raw, b: Raw) -> Raw:
        return a - b if self.is_rational else (a - b) % self.p

    def rmul(self, a: Raw, b: Raw) -> Raw:
        return a * b if self.is_rational else (a * b) % self.p

    def rneg(self, a: Raw) -> Raw:
        return -a if self.is_rational else (-a) % self.p

    def rinv(self, a: Raw) -> Raw:
        if not a:
            raise ZeroDivisionError("division by zero")
        return 1 / a if self.is_rational else pow(a, -1, self.p)

    def rdiv(self, a: Raw, b: Raw) -> Raw:
        return self.rmul(a, self.rinv(b))

    def from_int(self, k: int) -> Raw:
        return Fraction(k) if self.is_rational else k % self.p

    def raw_to_string(self, a: Raw) -> str:
        if self.is_rational:
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return str(a)

    def raw_from_string(self, s) -> Raw:
        if isinstance(s, int):
            return self.canon(s)
        text = str(s).strip()
        if "/" in text:
            num, den = text.split("/")
            return self.canon(Fraction(int(num), int(den)))
        return self.canon(int(text))

    def describe(self) -> str:
        return "Q" if self.is_rational else f"q{self.p}"


_RATIONALS = FieldSpec(RATIONALS)


def rationals() -> FieldSpec:
    return _RATIONALS


def prime_field(p: int) -> FieldSpec:
    return FieldSpec(PRIME_FIELD, p)


def parse_field(text: str) -> FieldSpec:
    """Parse a field descriptor: "Q" for the rationals, "q<p>" for F_p."""
    t = text.strip()
    if t in ("Q", "q", "QQ", "rationals"):
        return rationals()
    if t and t[0] in ("q", "p", "f", "F") and t[1:].isdigit():
        return prime_field(int(t[1:]))
    if t.isdigit():
        return prime_field(int(t))
    raise ValueError(f"cannot parse field descriptor {text!r}")


@dataclass(frozen=True)
class Scalar:
    """An exact element of a fixed coefficient field."""

    field: FieldSpec
    value: Raw

    @staticmethod
    def of(field: FieldSpec, value) -> "Scalar":
        return Scalar(field, field.canon(value))

    def is_zero(self) -> bool:
        return not self.value

    def __str__(self) -> str:
        return self.field.raw_to_string(self.value)

    def _check(self, other: "Scalar") -> None:
        if self.field != other.field:
            raise FieldMismatchError(
                f"mixed fields: {self.field.describe()} vs {other.field.describe()}"
            )

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.field.radd(self.value, other.value))

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.field.rsub(self.value, other.value))

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.field.rmul(self.value, other.value))

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.field, self.field.rdiv(self.value, other.value))

    def __neg__(self) -> "Scalar":
        return Scalar(self.field, self.field.rneg(self.value))


def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def sub(a: Scalar, b: Scalar) -> Scalar:
    return a - b


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def div(a: Scalar, b: Scalar) -> Scalar:
    return a / b
