from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from outerlab.errors import InvalidInput
from outerlab.freegroup.words import (
    ConjClass,
    Word,
    canonicalize,
    classes_up_to,
    cyclic_reduce,
    inverse,
    reduce_word,
)

letters2 = st.text(alphabet="aAbB", max_size=14)
letters3 = st.text(alphabet="aAbBcC", max_size=12)


def test_canonicalize_examples():
    assert canonicalize("abBa", 2).word == "aa"
    assert canonicalize("baB", 2).word == "a"
    assert canonicalize("ba", 2).word == "ab"
    assert canonicalize(Word("bA", 2)).word == "Ab"


def test_class_and_inverse_are_distinct():
    c = ConjClass("ab", 2)
    assert c.inverse().word == "AB"
    assert c != c.inverse()


def test_rejects_foreign_letters():
    with pytest.raises(InvalidInput):
        ConjClass("ac", 2)
    with pytest.raises(InvalidInput):
        Word("x", 2)


def test_trivial_class():
    assert ConjClass("aA", 2).trivial


def _necklace_count(rank, n):
    # cyclically reduced words of length d, then Burnside over rotations
    def cr(d):
        return (2 * rank - 1) ** d + 1 + (rank - 1) * (1 + (-1) ** d)

    def phi(m):
        return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)

    return sum(phi(n // d) * cr(d) for d in range(1, n + 1) if n % d == 0) // n


@pytest.mark.parametrize("rank,max_len", [(2, 8), (3, 4)])
def test_class_count_matches_necklace_formula(rank, max_len):
    expected = sum(_necklace_count(rank, n) for n in range(1, max_len + 1))
    assert len(classes_up_to(rank, max_len)) == expected


def test_class_count_frozen():
    assert len(classes_up_to(2, 8)) == 1386


@given(letters2)
def test_reduce_is_idempotent_and_free_of_cancellation(w):
    r = reduce_word(w)
    assert reduce_word(r) == r
    assert all(r[i] != r[i + 1].swapcase() for i in range(len(r) - 1))


@given(letters2, letters2)
def test_conjugates_share_a_class(w, g):
    a = ConjClass(w, 2)
    b = ConjClass(reduce_word(g + w + inverse(g)), 2)
    assert a == b


@given(letters3, st.integers(0, 20))
def test_rotation_invariance(w, k):
    _, core = cyclic_reduce(reduce_word(w))
    if core:
        k %= len(core)
        assert ConjClass(core, 3) == ConjClass(core[k:] + core[:k], 3)


@given(letters2)
def test_inverse_is_an_involution(w):
    c = ConjClass(w, 2)
    assert c.inverse().inverse() == c
    assert len(c.inverse()) == len(c)
