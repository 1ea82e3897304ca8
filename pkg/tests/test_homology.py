from outerlab.freegroup.automorphisms import Automorphism
from outerlab.freegroup.homology import iwip_heuristic


def test_golden_passes():
    v = iwip_heuristic(Automorphism.parse("ab,a"))
    assert v.passed
    assert v.charpoly == "x**2 - x - 1"
    assert abs(v.spectral_radius - (1 + 5 ** 0.5) / 2) < 1e-12


def test_identity_and_swap_are_cyclotomic():
    for spec in ("a,b", "b,a"):
        v = iwip_heuristic(Automorphism.parse(spec))
        assert not v
        assert v.reason.startswith("cyclotomic")


def test_reducible_fails():
    v = iwip_heuristic(Automorphism.parse("ab,b,c"))
    assert not v


def test_rank3_catalog_entry():
    assert iwip_heuristic(Automorphism.parse("b,c,ab"))
