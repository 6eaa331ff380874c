import json
from fractions import Fraction

import pytest

from singloci import bounds
from singloci.bounds import (IntPoly, L0Certificate, SECOND_COMPONENT, SMALL_DEGREE,
                             SMALL_DEGREE_UNCONDITIONAL, compute_l0,
                             gap_second_component, gap_small_degree,
                             verify_certificate)
from singloci.formulas import binom


def test_gap_small_degree_hand_values():
    # c = 3*1 - 1 - 4 = -2; lhs = c + C(4,2) = 4; rhs = 2*C(5,1) = 10
    g = gap_small_degree(3, 1, 2, 7)
    assert (g.lhs, g.rhs, g.margin) == (4, 10, 6)
    assert g.holds
    # at l = 5 the margin is 2; at l = 4 it is exactly 0 (fails strictly)
    assert gap_small_degree(3, 1, 2, 5).margin == 2
    assert gap_small_degree(3, 1, 2, 4).margin == 0
    assert not gap_small_degree(3, 1, 2, 4).holds


def test_gap_small_degree_single_term_at_d2():
    g = gap_small_degree(3, 1, 2, 9)
    assert g.rhs == 2 * binom(9 - 4 + 2, 1)


def test_gap_small_degree_branching():
    g1 = gap_small_degree(3, 1, 2, 7)
    assert g1.inequality == SMALL_DEGREE_UNCONDITIONAL and not g1.conditional
    g2 = gap_small_degree(4, 2, 2, 7)
    assert g2.inequality == SMALL_DEGREE and g2.conditional
    with pytest.raises(ValueError):
        gap_small_degree(3, 1, 1, 7)


def test_gap_small_degree_monotone_in_l():
    for n, b, d in [(3, 1, 2), (4, 2, 3), (5, 3, 4)]:
        margins = [gap_small_degree(n, b, d, l).margin
                   for l in range(2 * d - 1, 2 * d + 20)]
        assert margins == sorted(margins)


def test_gap_second_component_hand_values():
    # c = -6; lhs = -6 + 2*C(10,0) + C(10,1) + C(5,2) = 16; rhs = 2*C(8,1) = 16
    g = gap_second_component(3, 1, 3, 12)
    assert (g.lhs, g.rhs, g.margin) == (16, 16, 0)
    assert not g.holds
    assert g.conditional


def test_gap_second_component_empty_sum_convention():
    # the sum over e = 3..d is empty below d = 3, so the domain guard trips
    with pytest.raises(ValueError):
        gap_second_component(3, 1, 2, 9)


def test_gap_second_component_domain_guards():
    with pytest.raises(ValueError) as err:
        gap_second_component(3, 2, 3, 9)
    assert "b = n-1" in str(err.value)
    # when n-b = 1 the d >= 4 branch activates
    g = gap_second_component(3, 2, 4, 9)
    assert g.params.d == 4


def test_gap_consistency_small_degree_b1():
    # the proven plane-curve dimension and the conjectural formula agree
    for n in range(3, 8):
        for d in range(2, 8):
            g = gap_small_degree(n, 1, d, 9)
            via_conj = (bounds._c_small(n, 1) + binom(d + 2, 2))
            assert g.lhs == via_conj


def test_second_component_margin_matches_gamma_form():
    # the inequality in its reduced form equals the direct comparison of
    # gamma2-based left side against the union-of-spaces bound
    from singloci.formulas import beta, union_bound, gamma2, binom as bb
    for n, b in [(3, 1), (4, 2), (4, 1)]:
        for d in (3, 4, 5):
            if b == n - 1 and d == 3:
                continue
            for l in range(2 * d - 1, 2 * d + 6):
                g = gap_second_component(n, b, d, l)
                c = bounds._c_second(b)
                lhs_full = c + beta(n, b, 2, l) + bb(d + b + 1, b + 1)
                rhs_full = union_bound(n, b, d, l)
                assert rhs_full - lhs_full == g.margin


def test_intpoly_basics():
    p = IntPoly.binomial(2, 2)  # C(x+2, 2)
    assert [p(x) for x in range(5)] == [1, 3, 6, 10, 15]
    q = IntPoly.of(Fraction(3), Fraction(-11, 2), Fraction(3, 2))
    assert q.cauchy_bound() == 1 + Fraction(11, 2) / Fraction(3, 2)
    assert IntPoly.from_json(q.to_json()) == q


def test_compute_l0_small_degree_3_1():
    cert = compute_l0(3, 1, SMALL_DEGREE)
    assert not cert.conditional
    # the margin at (d, l) = (2, 4) is exactly zero, so any valid l0 exceeds 4
    assert cert.l0 >= 5
    assert cert.l0 == 6 and cert.d0 == 5
    assert [(e.d, e.l_min) for e in cert.table] == [(2, 5), (3, 6), (4, 7), (5, 8)]
    assert verify_certificate(cert).ok


def test_compute_l0_small_degree_4_2():
    cert = compute_l0(4, 2, SMALL_DEGREE)
    assert cert.conditional
    assert cert.l0 == 6
    assert verify_certificate(cert).ok


def test_compute_l0_second_component_3_1():
    cert = compute_l0(3, 1, SECOND_COMPONENT)
    assert cert.conditional
    assert cert.dmin == 3
    # the margin at (d, l) = (3, 12) is exactly zero, so any valid l0 exceeds 12
    assert cert.l0 >= 13
    assert cert.l0 == 13
    assert verify_certificate(cert).ok


def test_compute_l0_second_component_top_b():
    cert = compute_l0(3, 2, SECOND_COMPONENT)
    assert cert.dmin == 4
    assert verify_certificate(cert).ok


def test_compute_l0_fixed_B():
    cert = compute_l0(3, 1, SMALL_DEGREE, fixed_B=5)
    assert cert.fixed_B == 5
    assert cert.tail is None
    assert [(e.d, e.l_min) for e in cert.table] == [(2, 5), (3, 6), (4, 7), (5, 8)]
    assert cert.l0 == 8
    assert verify_certificate(cert).ok
    with pytest.raises(ValueError):
        compute_l0(3, 1, SECOND_COMPONENT, fixed_B=4)


def test_certificate_json_round_trip():
    for cert in (compute_l0(3, 1, SMALL_DEGREE),
                 compute_l0(3, 1, SECOND_COMPONENT),
                 compute_l0(3, 1, SMALL_DEGREE, fixed_B=3)):
        blob = json.dumps(cert.to_json(), sort_keys=True)
        again = L0Certificate.from_json(json.loads(blob))
        assert again == cert
        assert verify_certificate(again).ok


def test_tampered_certificate_fails():
    cert = compute_l0(3, 1, SMALL_DEGREE)
    obj = cert.to_json()
    obj["l0"] = "4"  # (2, 4) has margin exactly 0
    bad = L0Certificate.from_json(obj)
    result = verify_certificate(bad)
    assert not result.ok
    names = [c["name"] for c in result.failures()]
    assert "window-replay" in names or "l0-coverage" in names


def test_tampered_tail_fails():
    cert = compute_l0(3, 1, SMALL_DEGREE)
    obj = cert.to_json()
    obj["tail"]["poly"] = ["1000", "0", "1"]
    bad = L0Certificate.from_json(obj)
    assert not verify_certificate(bad).ok


def test_tampered_table_entry_fails():
    cert = compute_l0(3, 1, SECOND_COMPONENT)
    base = json.dumps(cert.to_json(), sort_keys=True)
    # a displaced polynomial-agreement floor is rejected
    obj = json.loads(base)
    obj["table"][0]["poly_floor"] = "1000"
    assert not verify_certificate(L0Certificate.from_json(obj)).ok
    # swapping in an eventually-positive but wrong margin polynomial is rejected
    obj = json.loads(base)
    obj["table"][0]["poly"] = ["1000000", "1"]
    assert not verify_certificate(L0Certificate.from_json(obj)).ok
    # inflating d0 past the table coverage is rejected
    obj = json.loads(base)
    obj["d0"] = str(cert.d0 + 3)
    assert not verify_certificate(L0Certificate.from_json(obj)).ok


def test_d0_dominates_cauchy_bound():
    for cert in (compute_l0(3, 1, SMALL_DEGREE), compute_l0(3, 1, SECOND_COMPONENT)):
        assert cert.tail.poly.cauchy_bound() <= cert.d0
        literal = bounds._tail_literal(cert.n, cert.b, cert.kind)
        assert all(literal(d) > 0 for d in range(cert.d0 + 1, cert.d0 + 51))


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        compute_l0(3, 1, "no-such-inequality")
