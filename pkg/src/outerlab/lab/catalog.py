"""Named automorphisms, graphs and pairs used by experiments and the CLI."""
from __future__ import annotations

from fractions import Fraction

from ..errors import InvalidInput
from ..freegroup.automorphisms import Automorphism
from ..freegroup.words import ConjClass
from ..laminations import IwipAxisSpec, iwip_laminations
from ..outerspace.graph import barbell, rose, theta

PHI = Automorphism.parse("ab,a")  # golden: abelianisation x^2 - x - 1
TAU = Automorphism.parse("a,ab")
PSI = TAU @ PHI @ TAU.inverse()
RANK3 = Automorphism.parse("b,c,ab")  # x^3 - x - 1, flagged heuristic like every entry

AUTOMORPHISMS = {
    "golden": PHI,
    "golden-conj": PSI,
    "tau": TAU,
    "rank3": RANK3,
}

GRAPHS = {
    "rose-half": lambda: rose(2, [Fraction(1, 2), Fraction(1, 2)]),
    "rose-third": lambda: rose(2, [Fraction(1, 3), Fraction(2, 3)]),
    "theta": lambda: theta(),
    "barbell": lambda: barbell(),
    "rose3": lambda: rose(3),
}

# the full rank-2 topology catalog: one marked representative per combinatorial type
RANK2_TOPOLOGIES = ("rose-half", "theta", "barbell")

FIXTURES = {
    "two-roses": ("rose-half", "rose-third"),
}


def automorphism(name):
    try:
        return AUTOMORPHISMS[name]
    except KeyError:
        raise InvalidInput(f"unknown automorphism {name!r}; known: {sorted(AUTOMORPHISMS)}") from None


def graph(name):
    try:
        return GRAPHS[name]()
    except KeyError:
        raise InvalidInput(f"unknown graph {name!r}; known: {sorted(GRAPHS)}") from None


def axis_pair(name="golden", depth=8, seed="a"):
    phi = automorphism(name)
    return iwip_laminations(IwipAxisSpec(phi, ConjClass(seed, phi.rank), depth))
