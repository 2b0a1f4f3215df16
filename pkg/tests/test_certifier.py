"""Catalog structure, numeric verification, normalization, certification."""

from fractions import Fraction

import pytest

from qparity.certifier import (CongruenceClaim, EtaTerm, case_data, catalog,
                               certify, claim_by_id, main_cases, mod2_class,
                               normalize_quotient, numeric_verify, sturm_bound)
from qparity.etaquot import EtaQuotient, ghn_check, order_table


def test_catalog_counts():
    claims = catalog()
    assert len([c for c in claims if c.shape == "two-term"]) == 12
    assert len([c for c in claims if c.shape == "three-term"]) == 2
    assert len([c for c in claims if c.shape == "aux"]) == 14
    assert all(c.numeric_only for c in claims if c.shape == "aux")


def test_catalog_rhs_shapes():
    c541 = claim_by_id("5,4,1")
    assert c541.rhs == (EtaTerm(0, ((1, -5),)), EtaTerm(0, ((5, -1),)))
    c5241 = claim_by_id("5,24,1")
    assert len(c5241.rhs) == 3
    assert c5241.rhs[2].qshift == 1
    with pytest.raises(KeyError):
        claim_by_id("6,0,1")


def test_numeric_verify_passes():
    assert numeric_verify(claim_by_id("5,4,1"), 10**4).ok
    assert numeric_verify(claim_by_id("3,8,3"), 10**4).ok
    assert numeric_verify(claim_by_id("eq12"), 10**4).ok


def test_numeric_verify_locates_first_mismatch():
    bogus = CongruenceClaim("5,3,1", "two-term", 5, 3, 1, "perturbed",
                            claim_by_id("5,4,1").rhs)
    result = numeric_verify(bogus, 2000)
    assert not result.ok
    assert result.first_mismatch is not None and result.first_mismatch < 10


def test_sturm_bound_values():
    assert sturm_bound(360, 44, True) == 1080
    assert sturm_bound(264, 28, False) == 6336
    assert sturm_bound(0, 44, True) == 0
    with pytest.raises(ValueError):
        sturm_bound(7, 44, True)


def test_mod2_class_collapse():
    assert mod2_class({1: -11, 2: 10, 7: 5, 14: -22}) == {1: 9, 7: -39}
    assert mod2_class({1: 1, 4: 2, 7: -3, 14: 18, 28: -18}) == {1: 9, 7: -39}
    assert mod2_class({2: 1, 1: -2}) == {}


def test_normalize_frobenius_route():
    # eta(z)^-1 eta(2z)^2 eta(11z)^11 eta(22z)^-22 -> the level-44 rewrite
    raw = {1: -1, 2: 2, 11: 11, 22: -22}
    budget = {d: Fraction(15) * v for d, v in
              order_table(EtaQuotient(44, {4: 24})).items()}
    exps, method = normalize_quotient(raw, 44, budget)
    assert method == "frobenius"
    assert exps == {1: -1, 4: 1, 11: 11, 44: -11}
    assert mod2_class(exps) == mod2_class(raw)


def test_normalize_linear_route_finds_trivial_character():
    # the 1/(q)^15 term of case 5,2,3 resists plain halving
    raw = {1: -5, 2: 8, 5: 1, 10: -16}
    budget = {d: Fraction(6) * v for d, v in
              order_table(EtaQuotient(20, {4: 24})).items()}
    exps, method = normalize_quotient(raw, 20, budget)
    assert method == "linear-trivial"
    assert mod2_class(exps) == mod2_class(raw)
    rep = ghn_check(EtaQuotient(20, dict(exps)))
    assert rep.is_form and rep.weight2 == 0 and rep.trivial_character()
    orders = order_table(EtaQuotient(20, dict(exps)))
    assert all(orders[d] >= -budget[d] for d in orders)


def test_certify_worked_case_11_6_1():
    cert = certify("11,6,1")
    assert cert.passed()
    assert cert.p_set == (6,)
    assert cert.nu == 0
    assert cert.s_vector == {1: 10, 2: 2, 11: 11, 22: -22}
    assert all(cert.thm45.values())
    assert cert.global_min_order == -15
    assert cert.clearing_j == 15
    assert cert.sturm_bound == 1080
    assert cert.character_branch == "same"


def test_certify_worked_case_7_1_3():
    cert = certify("7,1,3")
    assert cert.passed()
    assert cert.p_set == (1,)
    assert cert.s_vector == {1: 10, 2: 10, 7: 5, 14: -22}
    assert cert.clearing_j == 11
    assert cert.sturm_bound == 6336
    assert cert.character_branch == "different"
    assert "1" in cert.character_note or "0" in cert.character_note


def test_certify_monotone_in_clearing_power():
    base = certify("3,2,3")
    bigger = certify("3,2,3", j_override=base.clearing_j + 2)
    assert base.passed() and bigger.passed()
    assert bigger.sturm_bound > base.sturm_bound


def test_certificate_text_is_deterministic_and_versioned():
    a = certify("5,4,1").to_text()
    b = certify("5,4,1").to_text()
    assert a == b
    assert a.startswith("cert-v1\n")
    assert "verdict: PROVEN" in a
    assert "s_vector:" in a and "sturm_bound:" in a and "lhs_sha256:" in a


def test_certify_rejects_aux():
    from qparity.certifier import CertificationError
    with pytest.raises(CertificationError):
        certify("eq4")


def test_case_data_covers_catalog():
    from qparity.arith import divisors
    for claim in main_cases():
        data = case_data(claim.id)
        n = claim.radu_tuple().N
        assert data.j >= 1
        assert tuple(sorted(data.s)) == divisors(n), claim.id
