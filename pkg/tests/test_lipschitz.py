import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from outerlab.errors import InvalidInput
from outerlab.freegroup.words import ConjClass, classes_up_to
from outerlab.outerspace import (
    act, barbell, is_marked_isometric, lipschitz_stretch, rose, sym_distance, theta,
)
from outerlab.outerspace.sampling import random_automorphism, random_marked_graph, relabelled_copy

HALF = rose(2, [F(1, 2), F(1, 2)])
THIRD = rose(2, [F(1, 3), F(2, 3)])
WORDS8 = classes_up_to(2, 8)


def exhaustive_stretch(S, T, classes=WORDS8):
    return max(T.length_of(c) / S.length_of(c) for c in classes)


def test_identity():
    st_ = lipschitz_stretch(HALF, HALF)
    assert st_.value == 1 and sym_distance(HALF, HALF).is_zero()


def test_two_roses():
    fwd = lipschitz_stretch(HALF, THIRD)
    bwd = lipschitz_stretch(THIRD, HALF)
    assert (fwd.value, fwd.witness) == (F(4, 3), ConjClass("b", 2))
    assert (bwd.value, bwd.witness) == (F(3, 2), ConjClass("a", 2))
    sd = sym_distance(HALF, THIRD)
    assert sd.product == 2
    assert sd.value == pytest.approx(math.log(2))
    assert sym_distance(THIRD, HALF).product == sd.product


def test_two_roses_exhaustive():
    assert exhaustive_stretch(HALF, THIRD) == F(4, 3)
    assert exhaustive_stretch(THIRD, HALF) == F(3, 2)


def test_witness_attains_value():
    rng = random.Random(11)
    for _ in range(30):
        S, T = random_marked_graph(2, rng), random_marked_graph(2, rng)
        s = lipschitz_stretch(S, T)
        assert s.value == T.length_of(s.witness) / S.length_of(s.witness)


def test_rank_mismatch():
    with pytest.raises(InvalidInput):
        lipschitz_stretch(HALF, rose(3))


@pytest.mark.parametrize("seed", range(15))
def test_candidate_oracle_equivalence(seed):
    rng = random.Random(seed)
    S, T = random_marked_graph(2, rng), random_marked_graph(2, rng)
    assert lipschitz_stretch(S, T).value == exhaustive_stretch(S, T)


@given(st.integers(0, 10 ** 6), st.sampled_from([2, 3]))
def test_triangle_inequality(seed, rank):
    rng = random.Random(seed)
    S, T, U = (random_marked_graph(rank, rng) for _ in range(3))
    assert lipschitz_stretch(S, U).value <= lipschitz_stretch(S, T).value * lipschitz_stretch(T, U).value
    assert lipschitz_stretch(S, T).value >= 1


@given(st.integers(0, 10 ** 6), st.sampled_from([2, 3]))
def test_equivariance(seed, rank):
    rng = random.Random(seed)
    S, T = random_marked_graph(rank, rng), random_marked_graph(rank, rng)
    phi = random_automorphism(rank, rng, 4)
    Sp, Tp = act(S, phi), act(T, phi)
    assert lipschitz_stretch(Sp, Tp).value == lipschitz_stretch(S, T).value
    assert lipschitz_stretch(Tp, Sp).value == lipschitz_stretch(T, S).value


@given(st.integers(0, 10 ** 6), st.sampled_from([2, 3]))
def test_zero_distance_iff_marked_isometric(seed, rank):
    rng = random.Random(seed)
    S = random_marked_graph(rank, rng)
    copy = relabelled_copy(S, rng)
    assert sym_distance(S, copy).is_zero() and is_marked_isometric(S, copy)
    T = random_marked_graph(rank, rng)
    assert sym_distance(S, T).is_zero() == is_marked_isometric(S, T)


def test_distinct_markings_are_apart():
    phi = random_automorphism(2, random.Random(0), 3)
    moved = act(HALF, phi)
    if is_marked_isometric(HALF, moved):
        pytest.skip("random move happened to preserve the rose")
    assert not sym_distance(HALF, moved).is_zero()


def test_catalog_topologies_mutually_apart():
    gs = [HALF, theta(), barbell()]
    for i, S in enumerate(gs):
        for T in gs[i + 1:]:
            assert sym_distance(S, T).product > 1
