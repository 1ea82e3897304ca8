"""Sampling certification of the three B-contracting conditions.

Negatives are definitive and carry a serialisable witness.  Positives only mean
that no counterexample turned up among the sampled trees.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import InvalidInput
from ..freegroup.whitehead import is_primitive
from ..laminations import RationalLamination, pairing
from ..outerspace.graph import MarkedGraph, act, barbell, format_fraction, parse_fraction, rose, theta
from ..outerspace.lipschitz import lipschitz_stretch
from ..outerspace.loops import tight_loops_up_to
from ..outerspace.sampling import random_lengths, random_marked_graph, random_topology
from .search import search


def to_sigma(T, S):
    """Rescale S into Sigma(T): sup over Lambda(T) of <S, .> equals stretch(T, S)."""
    st = lipschitz_stretch(T, S).value
    return S.with_lengths([q / st for q in S.lengths], check=False)


def _pair_ratio(T, mu, nu):
    return pairing(T, mu) / pairing(T, nu)


@dataclass
class Witness:
    item: int
    T: MarkedGraph
    S: MarkedGraph
    lam: RationalLamination  # the normalised lamination that was paired with S
    value: Fraction
    bound: Fraction

    def to_dict(self):
        return {
            "item": self.item,
            "T": self.T.to_dict(),
            "S": self.S.to_dict(),
            "lamination": self.lam.to_records(),
            "rank": self.lam.rank,
            "value": format_fraction(self.value),
            "bound": format_fraction(self.bound),
        }


def recheck(data):
    """Re-derive a violation from its serialised witness alone; True iff still a violation."""
    T = MarkedGraph.from_dict(data["T"])
    S = MarkedGraph.from_dict(data["S"], require_volume_one=False)  # rescaled into Sigma(T)
    lam = RationalLamination.from_records(data["lamination"], data["rank"])
    bound = parse_fraction(data["bound"])
    if lipschitz_stretch(T, S).value != 1:
        return False
    # item 2 pairs S with mu_T + nu_T (pairing 2 with T); item 3 with one normalised basic class
    if pairing(T, lam) != (2 if data["item"] == 2 else 1):
        return False
    return pairing(S, lam) < bound and pairing(S, lam) == parse_fraction(data["value"])


@dataclass
class ItemVerdict:
    verdict: str  # 'passed' | 'violated' | 'vacuous'
    checked: int
    minimum: Fraction | None = None
    witnesses: list = field(default_factory=list)

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "checked": self.checked,
            "minimum": None if self.minimum is None else format_fraction(self.minimum),
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


@dataclass
class ContractingReport:
    B: Fraction
    eps: Fraction
    T: MarkedGraph
    ratio: Fraction
    item1: ItemVerdict
    item2: ItemVerdict
    item3: ItemVerdict
    samples: int
    bal_samples: int
    basic_classes: tuple

    @property
    def passed(self):
        return all(i.verdict != "violated" for i in (self.item1, self.item2, self.item3))

    def to_dict(self):
        return {
            "B": format_fraction(self.B),
            "eps": format_fraction(self.eps),
            "T": self.T.to_dict(),
            "ratio": format_fraction(self.ratio),
            "item1": self.item1.to_dict(),
            "item2": self.item2.to_dict(),
            "item3": self.item3.to_dict(),
            "samples": self.samples,
            "bal_samples": self.bal_samples,
            "basic_classes": [str(c) for c in self.basic_classes],
            "passed": self.passed,
        }


def sample_pool(rank, rng, n, anchors=()):
    """Random trees, the small catalog, and random trees moved onto each anchor's marking."""
    pool = []
    if rank == 2:
        pool += [rose(2), theta(), barbell()]
    anchors = list(anchors)
    for k in range(n):
        g = random_marked_graph(rank, rng, hi=40)
        if anchors and k % 2:
            g = act(g, _marking_automorphism(rng.choice(anchors)), check=False).check()
        pool.append(g)
    return pool


def _marking_automorphism(g):
    """theta with g = act(g with the standard marking, theta) when g is a rose."""
    from ..freegroup.automorphisms import Automorphism

    if g.num_vertices != 1:
        raise InvalidInput("anchor must be a rose")
    return Automorphism.from_images(g.marking)


def sample_bal(mu, nu, rng, tries=1):
    """A volume-one tree with <U, mu> = <U, nu> exactly, or None.

    f(U) = <U,mu> - <U,nu> is linear on a simplex; pick a random interior point,
    find an interior point of opposite sign and interpolate to the zero.
    """
    rank = mu.rank
    for _ in range(tries):
        g = random_topology(rank, rng)
        g = g.with_lengths(random_lengths(g.num_edges, rng, hi=1000), check=False)
        if rng.random() < 0.5:
            from ..outerspace.sampling import random_automorphism

            g = act(g, random_automorphism(rank, rng, rng.randint(0, 3)), check=False)
        E = g.num_edges
        coef = [Fraction(0)] * E
        for lam, sign in ((mu, 1), (nu, -1)):
            for c, w in lam.support:
                for i, k in enumerate(g.occupancy(c)):
                    coef[i] += sign * w * k
        x = list(g.lengths)
        fx = sum(c * q for c, q in zip(coef, x))
        if fx == 0:
            return g.check()
        want = [i for i in range(E) if (coef[i] < 0) == (fx > 0) and coef[i] != 0]
        if not want:
            continue
        j = rng.choice(want)
        delta = Fraction(1, 2)
        for _ in range(60):
            y = [delta / E] * E
            y[j] += 1 - delta
            fy = sum(c * q for c, q in zip(coef, y))
            if (fy > 0) != (fx > 0) and fy != 0:
                break
            delta /= 2
        else:
            continue
        th = fx / (fx - fy)
        z = [(1 - th) * a + th * b for a, b in zip(x, y)]
        return g.with_lengths(z)
    return None


def basic_primitive(U, limit=10 ** 4):
    loops, _ = tight_loops_up_to(U, 2, max_paths=limit)
    seen, out = set(), []
    for _, c in loops:
        if c not in seen and is_primitive(c).primitive:
            seen.add(c)
            out.append(c)
    return out


def contracting_certify(mu, nu, B, eps, samples, seed=0, T=None, anchors=(), bal_samples=None, extra=()):
    """Check the three conditions at a distinguished T in Min_eps(mu + nu)."""
    B = Fraction(B)
    if B <= 1:
        raise InvalidInput("B must exceed 1")
    rng = random.Random(seed)
    if T is None:
        T, _, _ = search(mu + nu, eps)
    ratio = _pair_ratio(T, mu, nu)
    inv = 1 / B
    if inv <= ratio <= B:
        item1 = ItemVerdict("passed", 1, ratio)
    else:
        item1 = ItemVerdict("violated", 1, ratio)

    mu_t = mu.scale(1 / pairing(T, mu))
    nu_t = nu.scale(1 / pairing(T, nu))
    both = mu_t + nu_t
    pool = [to_sigma(T, S) for S in list(extra) + sample_pool(mu.rank, rng, samples, anchors)]

    item2 = ItemVerdict("passed", 0)
    for S in pool:
        v = pairing(S, both)
        item2.checked += 1
        if item2.minimum is None or v < item2.minimum:
            item2.minimum = v
        if v < inv:
            item2.verdict = "violated"
            item2.witnesses.append(Witness(2, T, S, both, v, inv))

    # item 3: S in Sigma(T) far out, i.e. Bal(e^s mu, e^-s nu) with |s| > B, e^{2s} = <S,nu>/<S,mu>
    far = [S for S in pool if abs(math.log(pairing(S, nu) / pairing(S, mu))) / 2 > B]
    n_bal = samples if bal_samples is None else bal_samples
    xis, seen = [], set()
    for _ in range(n_bal):
        U = sample_bal(mu, nu, rng, tries=5)
        if U is None:
            continue
        for c in basic_primitive(U):
            if c not in seen:
                seen.add(c)
                xis.append(RationalLamination.dirac(c.word, mu.rank, 1 / T.length_of(c)))
    item3 = ItemVerdict("passed" if far and xis else "vacuous", 0)
    for S in far:
        for xi in xis:
            v = pairing(S, xi)
            item3.checked += 1
            if item3.minimum is None or v < item3.minimum:
                item3.minimum = v
            if v < inv:
                item3.verdict = "violated"
                item3.witnesses.append(Witness(3, T, S, xi, v, inv))
    return ContractingReport(B, Fraction(eps), T, ratio, item1, item2, item3, len(pool), n_bal, tuple(sorted(seen)))
