import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from outerlab.errors import InvalidInput
from outerlab.freegroup.automorphisms import Automorphism
from outerlab.freegroup.words import ConjClass, classes_up_to
from outerlab.lab.catalog import PHI, axis_pair
from outerlab.laminations import (
    IwipAxisSpec, RationalLamination, balance_param, fills_certificate, iwip_laminations, normalize, pairing,
)
from outerlab.outerspace import act, rose, theta
from outerlab.outerspace.sampling import random_automorphism, random_marked_graph

HALF = rose(2, [F(1, 2), F(1, 2)])


def lam(*pairs, rank=2):
    return RationalLamination(tuple(pairs), rank)


def test_pairing_examples():
    mu = lam(("a", 1), ("b", 2))
    assert pairing(HALF, mu) == F(3, 2)
    assert pairing(HALF, mu.scale(F(2, 7))) == F(2, 7) * F(3, 2)
    assert pairing(HALF, normalize(mu, HALF)) == 1


def test_lamination_invariants():
    merged = lam(("ab", 1), ("ba", "1/2"))  # same class twice
    assert merged.support == ((ConjClass("ab", 2), F(3, 2)),)
    for bad in [(("a", 0),), (("aA", 1),), ()]:
        with pytest.raises(InvalidInput):
            RationalLamination(bad, 2)
    with pytest.raises(InvalidInput):
        pairing(rose(3), lam(("a", 1)))


def test_records_round_trip():
    mu = lam(("ab", "3/4"), ("b", 2))
    assert RationalLamination.from_records(mu.to_records(), 2) == mu


@given(st.integers(0, 10 ** 6))
def test_pairing_bilinear(seed):
    rng = random.Random(seed)
    T = random_marked_graph(2, rng)
    cs = rng.sample(classes_up_to(2, 4), 3)
    ws = [F(rng.randint(1, 9), rng.randint(1, 9)) for _ in cs]
    mu = RationalLamination(tuple(zip(cs, ws)), 2)
    assert pairing(T, mu) == sum(w * pairing(T, RationalLamination.dirac(c.word, 2)) for c, w in zip(cs, ws))
    doubled = T.with_lengths([2 * q for q in T.lengths], check=False)
    assert pairing(doubled, mu) == 2 * pairing(T, mu)


@given(st.integers(0, 10 ** 6))
def test_push_matches_action(seed):
    rng = random.Random(seed)
    T = random_marked_graph(2, rng)
    phi = random_automorphism(2, rng, 4)
    mu = RationalLamination(tuple((c, 1) for c in rng.sample(classes_up_to(2, 4), 2)), 2)
    assert pairing(act(T, phi), mu) == pairing(T, mu.push(phi))


def test_iwip_depths():
    mu, nu = iwip_laminations(IwipAxisSpec(PHI, ConjClass("a", 2), 1))
    assert mu.classes() == [ConjClass("ab", 2)] and nu.classes() == [ConjClass("b", 2)]
    assert pairing(rose(2), mu) == pairing(rose(2), nu) == 1
    mu0, nu0 = iwip_laminations(IwipAxisSpec(PHI, ConjClass("a", 2), 0))
    assert mu0 == nu0 == RationalLamination.dirac("a", 2, 2)  # length 1/2 on the standard rose


def test_fibonacci_growth():
    from outerlab.laminations import _iterate

    T0 = rose(2, [F(1), F(1)], check=False)
    assert [T0.length_of(_iterate(PHI, "a", m)) for m in range(5)] == [1, 2, 3, 5, 8]


def test_iwip_spec_rejections():
    with pytest.raises(InvalidInput):
        IwipAxisSpec(Automorphism.identity(2), ConjClass("a", 2), 3)
    with pytest.raises(InvalidInput):
        IwipAxisSpec(PHI, ConjClass("a", 2), -1)
    assert IwipAxisSpec(PHI, ConjClass("a", 2), 8).lambda_estimate > 1


def test_fills_certificates():
    a = lam(("a", 1))
    no = fills_certificate(a, a)
    assert not no.certified and no.factor == ("a",)
    assert fills_certificate(lam(("abAB", 1)), lam(("ab", 1))).certified
    assert fills_certificate(*axis_pair("golden", 3)).certified


def test_balance_examples():
    mu = lam(("a", 2))  # pairing 1 on HALF
    assert balance_param(HALF, mu, mu).t == 0
    b = balance_param(HALF, mu, lam(("a", 8)))
    assert b.exp_t == 4 and b.t == pytest.approx(math.log(4))


@given(st.integers(0, 10 ** 6), st.fractions(F(1, 50), 50), st.fractions(F(1, 50), 50))
def test_balance_scaling_and_antisymmetry(seed, c, c2):
    rng = random.Random(seed)
    T = random_marked_graph(2, rng)
    mu, nu = lam(("ab", 1)), lam(("aB", 1), ("b", 1))
    base = balance_param(T, mu, nu).exp_t
    assert balance_param(T, mu.scale(c), nu.scale(c2)).exp_t == base * c2 / c
    assert balance_param(T, nu, mu).exp_t == 1 / base


def test_golden_balance_depth_stability():
    # off the normalising rose the balance drifts by at most lambda^2 per extra depth
    T = theta([F(1, 5), F(1, 3), F(7, 15)])
    prev = None
    for m in range(3, 10):
        spec = IwipAxisSpec(PHI, ConjClass("a", 2), m)
        lam_ = spec.lambda_estimate
        e = balance_param(T, *iwip_laminations(spec)).exp_t
        if prev is not None:
            assert 1 / lam_ ** 2 <= e / prev <= lam_ ** 2
        prev = e
