"""Finitely supported measured laminations and their pairing with marked graphs."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput
from .freegroup.automorphisms import Automorphism, apply_images
from .freegroup.homology import iwip_heuristic
from .freegroup.whitehead import common_proper_factor
from .freegroup.words import ConjClass
from .outerspace.graph import format_fraction, parse_fraction, rose


@dataclass(frozen=True)
class RationalLamination:
    """Positive rational combination of Dirac masses on conjugacy classes."""

    support: tuple
    rank: int

    def __post_init__(self):
        merged = {}
        order = []
        for cls, w in self.support:
            cls = ConjClass.of(cls, self.rank)
            w = parse_fraction(w)
            if cls.trivial:
                raise InvalidInput("trivial class in a lamination")
            if w <= 0:
                raise InvalidInput("lamination weights must be positive")
            if cls not in merged:
                order.append(cls)
                merged[cls] = Fraction(0)
            merged[cls] += w
        if not order:
            raise InvalidInput("empty lamination")
        object.__setattr__(self, "support", tuple((c, merged[c]) for c in order))

    @classmethod
    def dirac(cls, word, rank, weight=1):
        return cls(((ConjClass.of(word, rank), Fraction(weight)),), rank)

    def classes(self):
        return [c for c, _ in self.support]

    def scale(self, c):
        c = Fraction(c)
        return RationalLamination(tuple((k, w * c) for k, w in self.support), self.rank)

    def __add__(self, other):
        if other.rank != self.rank:
            raise InvalidInput("rank mismatch")
        return RationalLamination(self.support + other.support, self.rank)

    def push(self, phi):
        """phi . mu: push every support class through phi."""
        return RationalLamination(
            tuple((ConjClass(apply_images(phi.images, c.word), self.rank), w) for c, w in self.support),
            self.rank,
        )

    def to_records(self):
        return [{"word": c.word, "weight": format_fraction(w)} for c, w in self.support]

    @classmethod
    def from_records(cls, records, rank):
        return cls(tuple((r["word"], parse_fraction(r["weight"])) for r in records), rank)


def pairing(T, mu):
    """<T, mu> = sum of weight * translation length."""
    if T.rank != mu.rank:
        raise InvalidInput(f"rank mismatch: graph {T.rank}, lamination {mu.rank}")
    return sum((w * T.length_of(c) for c, w in mu.support), Fraction(0))


def normalize(mu, T):
    """Representative of [mu] in Lambda(T): pairing with T equal to 1."""
    return mu.scale(1 / pairing(T, mu))


@dataclass(frozen=True)
class IwipAxisSpec:
    phi: Automorphism
    seed: ConjClass
    depth: int

    def __post_init__(self):
        if self.depth < 0:
            raise InvalidInput("depth must be nonnegative")
        verdict = iwip_heuristic(self.phi)
        if not verdict:
            raise InvalidInput(f"automorphism {self.phi} fails the iwip heuristic: {verdict.reason}")

    @property
    def lambda_estimate(self):
        """Ratio of rose lengths of phi^m(seed) and phi^(m-1)(seed)."""
        T0 = rose(self.phi.rank)
        m = max(self.depth, 1)
        hi = _iterate(self.phi, self.seed.word, m)
        lo = _iterate(self.phi, self.seed.word, m - 1)
        return T0.length_of(hi) / T0.length_of(lo)


def _iterate(phi, word, k):
    w = ConjClass(word, phi.rank).word
    for _ in range(k):
        w = ConjClass(apply_images(phi.images, w), phi.rank).word
    return w


def iwip_laminations(spec):
    """(mu_m, nu_m): Dirac masses on phi^m(seed) and phi^-m(seed), normalised at the standard rose."""
    T0 = rose(spec.phi.rank)
    fwd = _iterate(spec.phi, spec.seed.word, spec.depth)
    bwd = _iterate(spec.phi.inverse(), spec.seed.word, spec.depth)
    mu = RationalLamination.dirac(fwd, spec.phi.rank)
    nu = RationalLamination.dirac(bwd, spec.phi.rank)
    return normalize(mu, T0), normalize(nu, T0)


@dataclass(frozen=True)
class FillsCertificate:
    certified: bool
    factor: tuple = ()
    verdict: object = None
    label: str = "fills-certified"


def fills_certificate(mu, nu):
    """Certified iff the combined supports lie in no common proper free factor."""
    if mu.rank != nu.rank:
        raise InvalidInput("rank mismatch")
    support = list(dict.fromkeys(mu.classes() + nu.classes()))
    verdict = common_proper_factor(support)
    if verdict.fills:
        return FillsCertificate(True, (), verdict)
    return FillsCertificate(False, verdict.factor, verdict, "not-certified" if verdict.contained else "inconclusive")


@dataclass(frozen=True)
class Balance:
    """exp(t) stored exactly; t = log of it."""

    exp_t: Fraction

    @property
    def t(self):
        return math.log(self.exp_t)


def balance_param(T, mu, nu):
    """The t with <T, e^{t/2} mu> = <T, e^{-t/2} nu>, i.e. e^t = <T,nu>/<T,mu>."""
    return Balance(pairing(T, nu) / pairing(T, mu))
