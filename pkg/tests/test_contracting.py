import json
from fractions import Fraction as F

import pytest

from outerlab.errors import InvalidInput
from outerlab.laminations import RationalLamination, pairing
from outerlab.minima.contracting import contracting_certify, recheck, sample_bal, to_sigma
from outerlab.outerspace import barbell, lipschitz_stretch, rose, theta

A, B_ = RationalLamination.dirac("a", 2), RationalLamination.dirac("b", 2)
HALF = rose(2, [F(1, 2), F(1, 2)])


def test_sigma_rescaling_is_exact():
    for S in (theta(), barbell(), rose(2, [F(1, 5), F(4, 5)])):
        assert lipschitz_stretch(HALF, to_sigma(HALF, S)).value == 1


def test_item1_ratio_one():
    rep = contracting_certify(A, B_, 2, F(1, 20), 5, T=HALF)
    assert rep.ratio == 1 and rep.item1.verdict == "passed"


def test_item1_violation():
    T = rose(2, [F(1, 50), F(49, 50)])
    rep = contracting_certify(A, B_, 2, F(1, 100), 0, T=T)
    assert rep.ratio == F(1, 49) and rep.item1.verdict == "violated" and not rep.passed


def test_b_must_exceed_one():
    with pytest.raises(InvalidInput):
        contracting_certify(A, B_, 1, F(1, 20), 1, T=HALF)


@pytest.mark.parametrize("eps, violated", [(F(1, 10), False), (F(1, 100), True), (F(1, 1000), True)])
def test_barbell_with_short_loops_degrades_item2(eps, violated):
    # in Sigma(T) the barbell pairs with 2(a + b) to 2 eps / (1 - eps)
    S = barbell([eps, 1 - 2 * eps, eps])
    assert pairing(to_sigma(HALF, S), A.scale(2) + B_.scale(2)) == 2 * eps / (1 - eps)
    rep = contracting_certify(A, B_, 20, F(1, 20), 0, T=HALF, extra=[S], bal_samples=0)
    assert (rep.item2.verdict == "violated") == violated
    for w in rep.item2.witnesses:
        data = json.loads(json.dumps(w.to_dict()))
        assert recheck(data)


def test_thin_rose_does_not_degrade_item2():
    S = rose(2, [F(1, 1000), F(999, 1000)])
    assert pairing(to_sigma(HALF, S), A.scale(2) + B_.scale(2)) >= 1


def test_recheck_rejects_tampered_witness():
    S = barbell([F(1, 100), F(98, 100), F(1, 100)])
    rep = contracting_certify(A, B_, 20, F(1, 20), 0, T=HALF, extra=[S], bal_samples=0)
    data = rep.item2.witnesses[0].to_dict()
    data["value"] = "1/2"
    assert not recheck(data)
    data = rep.item2.witnesses[0].to_dict()
    data["bound"] = "1/1000"
    assert not recheck(data)


def test_sample_bal_is_balanced(golden_pair, rng):
    mu, nu = golden_pair
    for _ in range(10):
        U = sample_bal(mu, nu, rng, tries=5)
        if U is not None:
            assert pairing(U, mu) == pairing(U, nu) and U.volume == 1


def test_golden_pass_at_sample(golden_pair, golden_line):
    mu, nu = golden_pair
    rep = contracting_certify(mu, nu, 20, F(1, 20), 20, anchors=golden_line.points, bal_samples=10)
    assert rep.passed
    assert rep.item1.verdict == "passed" and rep.item2.verdict == "passed"
    assert rep.item3.verdict in ("passed", "vacuous")
    json.dumps(rep.to_dict())
