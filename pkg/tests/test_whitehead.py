import pytest
from hypothesis import given
from hypothesis import strategies as st

from outerlab.freegroup.automorphisms import Automorphism
from outerlab.freegroup.stallings import is_basis
from outerlab.freegroup.whitehead import (
    abelian_gcd,
    common_proper_factor,
    graph_shape,
    is_primitive,
    verify_factor,
    whitehead_automorphisms,
    whitehead_minimize,
)
from outerlab.freegroup.words import ConjClass, classes_up_to, power_root


def test_move_counts():
    assert len(whitehead_automorphisms(2)) == 12
    assert len(whitehead_automorphisms(3)) == 90


def test_minimize_aab():
    assert whitehead_minimize([ConjClass("aab", 2)]).total_length == 1


def test_minimize_proper_power():
    # abab = (ab)^2; every image is a square so its length is even, and a -> aB gives aa
    assert Automorphism.parse("aB,b")(ConjClass("abab", 2)).word == "aa"
    assert whitehead_minimize([ConjClass("abab", 2)]).total_length == 2


def test_primitive_aab_certificate():
    res = is_primitive(ConjClass("aab", 2))
    assert res.primitive
    assert "aab" in res.basis
    assert is_basis(res.basis, 2)


def test_commutator_not_primitive():
    assert not is_primitive(ConjClass("abAB", 2))


@pytest.mark.parametrize(
    "words,rank,kind",
    [
        (("a", "b"), 3, "contained"),
        (("abAB",), 2, "fills"),
        (("ab", "a"), 2, "fills"),
        (("a", "b"), 2, "fills"),
        (("a", "bcBC"), 3, "fills"),
        (("aab",), 2, "contained"),
        (("ab", "aB"), 3, "contained"),
    ],
)
def test_common_factor_examples(words, rank, kind):
    classes = [ConjClass(w, rank) for w in words]
    v = common_proper_factor(classes)
    assert v.kind == kind
    if v.contained:
        assert verify_factor(v, classes, rank)


def test_whitehead_graph_shapes():
    assert graph_shape(("ab",), 2)[0] == "disconnected"
    assert graph_shape(("aab",), 2) == ("cut-vertex", "a")
    assert graph_shape(("abAB",), 2)[0] == "biconnected"


@pytest.mark.parametrize("c", classes_up_to(2, 6))
def test_primitive_implies_unit_gcd_rank2(c):
    res = is_primitive(c)
    if res.primitive:
        assert abelian_gcd(c, 2) == 1
        assert is_basis(res.basis, 2)
    root, k = power_root(c.word)
    if k > 1:
        assert not res.primitive


@given(st.text(alphabet="aAbBcC", min_size=1, max_size=7))
def test_contained_certificates_always_verify(w):
    c = ConjClass(w, 3)
    if c.trivial:
        return
    v = common_proper_factor([c])
    if v.contained:
        assert verify_factor(v, [c], 3)
