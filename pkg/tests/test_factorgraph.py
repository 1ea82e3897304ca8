import random
from fractions import Fraction as F

import pytest

from outerlab.errors import ChainBroken, InvalidInput
from outerlab.factorgraph import (
    FFVertex, basic_classes, basic_enumeration, ff_leq2, ff_upper_bound, projection_spread, psi_retraction,
    recheck_leq2, shadow_along, upsilon,
)
from outerlab.freegroup.automorphisms import apply_images
from outerlab.freegroup.words import ConjClass, classes_up_to
from outerlab.lab.catalog import PHI
from outerlab.outerspace import act, rose, systole
from outerlab.outerspace.sampling import random_automorphism, random_marked_graph


def C(w, rank=2):
    return ConjClass(w, rank)


def oracle_basic(T, max_letters):
    return sorted((c for c in classes_up_to(T.rank, max_letters) if T.length_of(c) <= 2),
                  key=lambda c: (T.length_of(c), c))


@pytest.mark.parametrize("T, letters", [
    (rose(2, [F(1, 2), F(1, 2)]), 4),
    (rose(2, [F(1, 4), F(3, 4)]), 8),
])
def test_basic_classes_match_word_oracle(T, letters):
    assert basic_classes(T) == oracle_basic(T, letters)


def test_basic_classes_thin_petal():
    got = set(basic_classes(rose(2, [F(1, 10), F(9, 10)])))
    assert C("a" * 20) in got and C("a" * 21) not in got and C("b") in got


def test_basic_classes_nonempty_on_samples():
    rng = random.Random(2)
    for rank in (2, 3):
        thick = [g for g in (random_marked_graph(rank, rng) for _ in range(60)) if systole(g) >= F(1, 20)]
        for g in thick[:20]:
            e = basic_enumeration(g)
            assert e.classes
            assert e.flagged == (e.explored > 10 ** 4)  # thin rank-3 samples may trip the diagnostic


def test_upsilon_examples():
    p = upsilon(rose(2))
    assert p.vertex == FFVertex(("a",), 2) and p.trace == ((C("a"), True),)
    q = upsilon(act(rose(2), PHI))
    assert q.trace[-1][1] and q.vertex.factor_rank == 1


def test_ff_vertex_validation():
    with pytest.raises(InvalidInput):
        FFVertex(("a", "b"), 2)
    with pytest.raises(InvalidInput):
        FFVertex(("a", "aa"), 3)


def test_ff_leq2_examples():
    v = ff_leq2(C("a", 3), C("b", 3))
    assert v.leq2 and set(v.middle.generators) == {"a", "b"}
    assert recheck_leq2(v, C("a", 3), C("b", 3))
    assert ff_leq2(C("a"), C("ab")).geq3
    for bad in [("a", "a"), ("a", "A"), ("a", "aa"), ("abAB", "a")]:
        with pytest.raises(InvalidInput):
            ff_leq2(C(bad[0]), C(bad[1]))


def _random_primitive(rng, rank):
    phi = random_automorphism(rank, rng, 4)
    return C(apply_images(phi.images, rng.choice("abc"[:rank])), rank)


@pytest.mark.parametrize("rank", [2, 3])
def test_ff_leq2_equivariance(rank):
    rng = random.Random(rank)
    done = 0
    while done < 100:
        a, b = _random_primitive(rng, rank), _random_primitive(rng, rank)
        if a == b or a == b.inverse():
            continue
        base = ff_leq2(a, b).kind
        g = random_automorphism(rank, rng, 3)
        moved = ff_leq2(C(apply_images(g.images, a.word), rank), C(apply_images(g.images, b.word), rank))
        conj = ff_leq2(C("c" + a.word + "C" if rank == 3 else "b" + a.word + "B", rank), b)
        assert moved.kind == base and conj.kind == base
        done += 1


def test_upper_bound_chains():
    assert ff_upper_bound([C("a")]) == 0
    assert ff_upper_bound([C("a", 3), C("b", 3), C("c", 3)]) == 4
    with pytest.raises(ChainBroken) as e:
        ff_upper_bound([C("a"), C("ab")])
    assert e.value.index == 0
    with pytest.raises(InvalidInput):
        ff_upper_bound([])


def test_upper_bound_monotone_under_refinement():
    short = [C("a", 3), C("ab", 3)]
    longer = [C("a", 3), C("b", 3), C("ab", 3)]
    assert ff_upper_bound(longer) >= ff_upper_bound(short)


def test_psi_near_origin(golden_line):
    alpha = upsilon(golden_line.at(0)).cls
    assert abs(float(psi_retraction(golden_line, alpha).t)) <= golden_line.kappa_emp


def test_psi_far_along_axis(golden_line):
    alpha = upsilon(golden_line.at(4)).cls
    assert psi_retraction(golden_line, alpha).t >= 3


def test_psi_requires_basis_with_alpha(golden_line):
    with pytest.raises(InvalidInput):
        psi_retraction(golden_line, C("a"), basis=("ab", "b"))


def test_projection_spread_budget(golden_line):
    rep = projection_spread(golden_line, upsilon(golden_line.at(0)).cls, count=20)
    assert rep.R_emp <= 2 * golden_line.kappa_emp + 4


def test_shadow_rows(golden_line):
    rows = shadow_along(golden_line)
    assert len(rows) == len(golden_line.grid) and rows[0].to_previous == ""
    assert {r.to_previous for r in rows[1:]} <= {"same", "leq2", "geq3", "inconclusive"}
