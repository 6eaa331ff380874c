from fractions import Fraction
from random import Random

import pytest

from singloci.scalars import (FieldMismatchError, Scalar, parse_field,
                              prime_field, rationals)

Q = rationals()
F5 = prime_field(5)


def test_rational_add():
    assert Scalar.of(Q, Fraction(1, 2)) + Scalar.of(Q, Fraction(1, 3)) == Scalar.of(Q, Fraction(5, 6))


def test_prime_field_mul():
    assert (Scalar.of(F5, 3) * Scalar.of(F5, 4)).value == 2


def test_canonical_form_on_construction():
    s = Scalar.of(Q, Fraction(2, 4))
    assert s.value == Fraction(1, 2)
    assert str(s) == "1/2"
    # canonicalizing twice changes nothing
    assert Scalar.of(Q, s.value) == s
    t = Scalar.of(F5, 12)
    assert t.value == 2
    assert Scalar.of(F5, t.value) == t


def test_negative_residues_normalize():
    assert Scalar.of(F5, -1).value == 4


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Scalar.of(Q, 1) / Scalar.of(Q, 0)
    with pytest.raises(ZeroDivisionError):
        Scalar.of(F5, 1) / Scalar.of(F5, 0)


def test_mixed_field_rejected():
    with pytest.raises(FieldMismatchError):
        Scalar.of(Q, 1) + Scalar.of(F5, 1)


def test_non_prime_modulus_rejected():
    with pytest.raises(ValueError):
        prime_field(6)
    with pytest.raises(ValueError):
        prime_field(1)


@pytest.mark.parametrize("field", [Q, F5], ids=["Q", "F5"])
def test_field_axioms_random_triples(field):
    rng = Random(7)

    def sample():
        if field.is_rational:
            return Scalar.of(field, Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        return Scalar.of(field, rng.randrange(5))

    for _ in range(200):
        a, b, c = sample(), sample(), sample()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == Scalar.of(field, 0)
        if not b.is_zero():
            assert (a / b) * b == a


def test_serialization_round_trip():
    for v in (Fraction(5, 6), Fraction(-7, 3), Fraction(4)):
        s = Scalar.of(Q, v)
        assert Q.raw_from_string(str(s)) == v
    s = Scalar.of(F5, 3)
    assert F5.raw_from_string(str(s)) == 3


def test_parse_field():
    assert parse_field("Q").is_rational
    assert parse_field("q7").p == 7
    assert parse_field("5").p == 5
    with pytest.raises(ValueError):
        parse_field("q6")
    with pytest.raises(ValueError):
        parse_field("nonsense")
