import json
from random import Random

import pytest

from singloci.gradedpoly import HomPoly, basis, random_poly
from singloci.scalars import FieldMismatchError, prime_field, rationals

Q = rationals()


def test_basis_sizes():
    assert len(basis(3, 0)) == 1
    assert basis(3, 0).monomials == ((0, 0, 0, 0),)
    # C(6,3) = 6*5*4/6 and C(7,3) = 7*6*5/6, by hand
    assert len(basis(3, 3)) == 6 * 5 * 4 // 6 == 20
    assert len(basis(3, 4)) == 7 * 6 * 5 // 6 == 35


def test_basis_rejects_negative_degree():
    with pytest.raises(ValueError):
        basis(3, -1)


def test_basis_order_is_descending_lex():
    mons = basis(2, 3).monomials
    assert mons[0] == (3, 0, 0)
    assert mons[-1] == (0, 0, 3)
    assert list(mons) == sorted(mons, reverse=True)


def test_mul_examples():
    x0 = HomPoly.variable(Q, 3, 0)
    x1 = HomPoly.variable(Q, 3, 1)
    x2 = HomPoly.variable(Q, 3, 2)
    assert (x0 * x1).terms == {(1, 1, 0, 0): 1}

    f = x0 * x2 - x1 * x1
    sq = f * f
    assert sq.terms == {(2, 0, 2, 0): 1, (1, 2, 1, 0): -2, (0, 4, 0, 0): 1}

    zero = HomPoly.zero(Q, 3, 2)
    assert (f * zero).is_zero()


def test_mul_field_mismatch():
    with pytest.raises(FieldMismatchError):
        HomPoly.variable(Q, 2, 0) * HomPoly.variable(prime_field(5), 2, 0)


def test_partial_examples():
    x0 = HomPoly.variable(Q, 3, 0)
    x1 = HomPoly.variable(Q, 3, 1)
    f = x0 * x0 * x1
    assert f.partial(0).terms == {(1, 1, 0, 0): 2}

    F2 = prime_field(2)
    y = HomPoly.variable(F2, 1, 0)
    assert (y * y).partial(0).is_zero()


def test_euler_identity_char_zero():
    rng = Random(3)
    for _ in range(10):
        f = random_poly(Q, 3, 4, rng)
        total = HomPoly.zero(Q, 3, 4)
        for i in range(4):
            total = total + HomPoly.variable(Q, 3, i) * f.partial(i)
        assert total == f.scale(4)


def test_euler_identity_prime_field_degree_coprime():
    F7 = prime_field(7)
    rng = Random(4)
    for deg in (3, 5):
        f = random_poly(F7, 2, deg, rng)
        total = HomPoly.zero(F7, 2, deg)
        for i in range(3):
            total = total + HomPoly.variable(F7, 2, i) * f.partial(i)
        assert total == f.scale(deg)


def test_sparse_dense_round_trip():
    rng = Random(9)
    b = basis(3, 3)
    f = random_poly(Q, 3, 3, rng)
    assert HomPoly.from_vector(Q, b, f.to_vector(b)) == f
    assert HomPoly.from_sparse_vector(Q, b, f.to_sparse_vector(b)) == f


def test_json_round_trip():
    rng = Random(5)
    f = random_poly(Q, 3, 3, rng)
    again = HomPoly.from_json(json.loads(json.dumps(f.to_json())), Q)
    assert again == f

    F5 = prime_field(5)
    g = random_poly(F5, 2, 2, rng)
    assert HomPoly.from_json(g.to_json(), F5) == g


def test_degree_validation():
    with pytest.raises(ValueError):
        HomPoly(Q, 2, 2, {(1, 0, 0): 1})


def test_evaluate():
    f = HomPoly.monomial(Q, 2, (1, 1, 0)) - HomPoly.monomial(Q, 2, (0, 0, 2))
    assert f.evaluate((2, 3, 1)) == 5
    F5 = prime_field(5)
    g = HomPoly.monomial(F5, 2, (1, 1, 0)) - HomPoly.monomial(F5, 2, (0, 0, 2))
    assert g.evaluate((2, 3, 1)) == 0


def test_scale_tail_variables():
    # x2 and x0*x1 - x3^2 with the last variable scaled to zero
    x2 = HomPoly.variable(Q, 3, 2)
    g = HomPoly.monomial(Q, 3, (1, 1, 0, 0)) - HomPoly.monomial(Q, 3, (0, 0, 0, 2))
    assert x2.scale_tail_variables(3, 0) == x2
    assert g.scale_tail_variables(3, 0).terms == {(1, 1, 0, 0): 1}
    assert g.scale_tail_variables(3, 1) == g
    # substitution commutes with scalar multiplication
    assert g.scale(3).scale_tail_variables(3, 0) == g.scale_tail_variables(3, 0).scale(3)
