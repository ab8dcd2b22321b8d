import itertools

import pytest

from nilgrass.errors import NotInSpanError
from nilgrass.grassmann import GrassmannRing, mul as gmul, oracle_mul
from nilgrass.isomorphism import (
    basic_algebra,
    b_decompose,
    center_basis,
    check_b_identities,
    check_center,
    check_duality,
    check_eta,
    check_eta_relations,
    eta,
    eta_hat,
)
from nilgrass.nilhecke import NilHecke, b_element
from nilgrass.report import VerificationReport
from nilgrass.sympoly import IntPolynomial

PAIRS = [(ell, n) for ell in range(1, 6) for n in range(1, ell + 1)] + [(6, 2), (6, 3)]
C42 = NilHecke(2, 4)


def test_decompose_examples():
    assert b_decompose(b_element((1,), C42), 4, 2).coefficients == {(1,): 1}
    sq = b_element((1,), C42) * b_element((1,), C42)
    assert b_decompose(sq, 4, 2).coefficients == {(2,): 1, (1, 1): 1}
    with pytest.raises(NotInSpanError) as info:
        b_decompose(C42.psi(1), 4, 2)
    assert info.value.residual == C42.psi(1)


def test_decompose_rejects_other_algebra():
    with pytest.raises(ValueError):
        b_decompose(NilHecke(2, 3).one(), 4, 2)


def test_eta_examples():
    G = GrassmannRing(2, 2)
    B = basic_algebra(4, 2)
    assert eta(G.cls((0, 1))) == B.b((1,))
    assert eta(G.cls((1, 1))) == B.b((1, 1))
    assert eta(G.one()) == B.one()
    assert eta_hat(G.cls((0, 1))) == B.b((1,))
    assert eta_hat(G.one()) == B.one()
    assert eta_hat(G.cls((1, 2))) == B.b((2, 1))


def test_eta_needs_positive_rank():
    with pytest.raises(ValueError):
        eta(GrassmannRing(0, 3).one())


@pytest.mark.parametrize("ell,n", PAIRS)
def test_eta_is_a_permutation_matrix(ell, n):
    ring = GrassmannRing(n, ell - n)
    B = basic_algebra(ell, n)
    images = [eta(ring.cls(a)).coefficients for a in ring.basis()]
    assert all(len(c) == 1 and set(c.values()) == {1} for c in images)
    assert sorted(next(iter(c)) for c in images) == sorted(B.partitions)


@pytest.mark.parametrize("ell,n", [(4, 2), (5, 2), (5, 3)])
def test_b_products_match_schur_coefficients(ell, n):
    ring = GrassmannRing(n, ell - n)
    for a, b in itertools.product(ring.basis(), repeat=2):
        x, y = ring.cls(a), ring.cls(b)
        assert eta(x) * eta(y) == eta(oracle_mul(x, y)) == eta(gmul(x, y))


def test_relation_examples():
    B = basic_algebra(4, 2)
    one = b_element((1,), C42)
    assert not one - one
    report = check_eta_relations(4, 2)
    assert [c.params["m"] for c in report.cases if c.name == "relation (3)"] == [3, 4]
    assert check_eta_relations(3, 2).passed
    assert any(c.name == "relation (22)" for c in check_eta_relations(3, 2).cases)
    assert B.b((3,)) == B.zero()


@pytest.mark.parametrize("ell,n", PAIRS)
def test_drivers_pass(ell, n):
    for check in (check_eta, check_center, check_duality):
        report = check(ell, n)
        assert report.passed, report.lines(failures_only=True)


@pytest.mark.parametrize("ell,n", [(ell, n) for ell, n in PAIRS if ell <= 5])
def test_b_identities(ell, n):
    report = check_b_identities(ell, n)
    assert report.passed, report.lines(failures_only=True)


def test_center_examples():
    polys = [f for _, _, f in center_basis(3, 2)]
    y1, y2 = IntPolynomial.variable(1, 2), IntPolynomial.variable(2, 2)
    assert set(polys) == {IntPolynomial.one(2), y1 + y2, y1 * y2}
    assert len(center_basis(2, 2)) == 1
    report = check_center(4, 2)
    assert report.passed
    assert len(center_basis(4, 2)) == 6


def test_duality_counts():
    assert len([c for c in check_duality(4, 2).cases if c.name == "eta = eta_hat . zeta"]) == 6
    assert len([c for c in check_duality(5, 2).cases if c.name == "eta = eta_hat . zeta"]) == 10


def test_report_keeps_witness_only_on_failure():
    r = VerificationReport("demo")
    r.check("good", True, "unused", x=1)
    r.check("bad", False, lambda: "2 != 3", x=(1, 2))
    assert not r.passed
    assert r.cases[0].witness is None
    assert r.failures[0].line() == "[FAIL] bad x=(1,2) :: 2 != 3"


def test_wrong_identification_is_caught():
    # relabelling (0,1) <-> (0,2) before eta is not multiplicative
    ring = GrassmannRing(2, 2)
    swap = {(0, 1): (0, 2), (0, 2): (0, 1)}

    def twisted(x):
        return eta(ring.element({swap.get(a, a): c for a, c in x.items()}))

    s1 = ring.cls((0, 1))
    assert twisted(s1) * twisted(s1) != twisted(gmul(s1, s1))
