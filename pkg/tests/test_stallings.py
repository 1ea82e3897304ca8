import random

from hypothesis import given
from hypothesis import strategies as st

from outerlab.freegroup.stallings import FoldedGraph, generates, is_basis, is_free_basis_of_subgroup
from outerlab.freegroup.words import inverse, reduce_word


def test_bases_and_non_bases():
    assert is_basis(("a", "b"), 2)
    assert is_basis(("ab", "b"), 2)
    assert is_basis(("a", "aab"), 2)
    assert not is_basis(("aa", "b"), 2)
    assert not is_basis(("a",), 2)
    assert generates(("a", "b", "ab"), 2)
    assert not is_free_basis_of_subgroup(("a", "b", "ab"), 2)


def test_membership():
    g = FoldedGraph(("aa", "b"), 2)
    assert g.contains("aab")
    assert g.contains("bAAb")
    assert not g.contains("a")
    assert g.subgroup_rank() == 2


def test_class_membership_up_to_conjugacy():
    g = FoldedGraph(("a", "b"), 3)
    assert g.contains_class("cabC")
    assert not g.contains_class("c")


@given(st.integers(0, 10 ** 6))
def test_products_of_generators_are_members(seed):
    rng = random.Random(seed)
    gens = [reduce_word("".join(rng.choice("aAbBcC") for _ in range(rng.randint(1, 4)))) for _ in range(2)]
    gens = [g for g in gens if g]
    if not gens:
        return
    g = FoldedGraph(tuple(gens), 3)
    w = ""
    for _ in range(rng.randint(0, 6)):
        x = rng.choice(gens)
        w += x if rng.random() < 0.5 else inverse(x)
    assert g.contains(reduce_word(w))
