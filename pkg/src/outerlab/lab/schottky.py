"""Schottky subgroups <phi^k, psi^k> and orbit experiments."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from ..errors import InvalidInput
from ..factorgraph import ff_leq2, upsilon
from ..freegroup.automorphisms import Automorphism, compose, is_inner
from ..freegroup.homology import iwip_heuristic
from ..freegroup.words import ConjClass
from ..laminations import IwipAxisSpec, RationalLamination, _iterate
from ..freegroup.whitehead import common_proper_factor
from ..outerspace.graph import act
from ..outerspace.lipschitz import sym_distance

LETTERS = ("g", "G", "h", "H")  # g = phi^k, h = psi^k, capitals are inverses


def reduced_words(length):
    """Reduced words of exactly this length over g, h and their inverses."""
    if length == 0:
        return [""]
    out = []
    for w in itertools.product(LETTERS, repeat=length):
        if all(w[i] != w[i + 1].swapcase() for i in range(length - 1)):
            out.append("".join(w))
    return out


def words_up_to(length):
    return [w for n in range(length + 1) for w in reduced_words(n)]


def _matmul(A, B):
    n = len(A)
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)) for i in range(n))


@dataclass
class FreeVerdict:
    free: bool
    L: int
    words: int
    relation: tuple | None = None  # two distinct words representing the same outer class
    inner_checks: int = 0


@dataclass
class SchottkySpec:
    phi: Automorphism
    psi: Automorphism
    k: int
    L: int
    verdict: FreeVerdict
    fills: bool
    gens: dict = field(default_factory=dict)

    def automorphism(self, word):
        """The automorphism of a word; letters compose left to right as functions."""
        f = Automorphism.identity(self.phi.rank)
        for ch in word:
            f = compose(f, self.gens[ch])
        return f


def _generators(phi, psi, k):
    g, h = phi ** k, psi ** k
    return {"g": g, "G": g.inverse(), "h": h, "H": h.inverse()}


def free_up_to(gens, L, rank):
    """Are all reduced words of length <= L pairwise distinct in Out(F_n)?

    Abelianisation matrices separate most pairs; collisions are settled by
    checking the quotient for innerness.  In rank 2 the matrix map is injective
    on Out(F_2), so the check is complete there too.
    """
    mats = {ch: f.abelianization() for ch, f in gens.items()}
    ident = tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))
    buckets = {}
    words = words_up_to(L)
    cache = {"": ident}
    for w in words:
        if w not in cache:
            cache[w] = _matmul(cache[w[:-1]], mats[w[-1]])
        buckets.setdefault(cache[w], []).append(w)
    checks = 0
    autos = {}

    def auto(w):
        if w not in autos:
            f = Automorphism.identity(rank)
            for ch in w:
                f = compose(f, gens[ch])
            autos[w] = f
        return autos[w]

    for group in buckets.values():
        for a, b in itertools.combinations(group, 2):
            checks += 1
            if is_inner(compose(auto(a).inverse(), auto(b))) is not None:
                return FreeVerdict(False, L, len(words), (a, b), checks)
    return FreeVerdict(True, L, len(words), None, checks)


def schottky_build(phi, psi, k, L, depth=6):
    if k <= 0:
        raise InvalidInput("the power k must be positive")
    if L < 0:
        raise InvalidInput("L must be nonnegative")
    if phi.rank != psi.rank:
        raise InvalidInput("rank mismatch")
    for f in (phi, psi):
        v = iwip_heuristic(f)
        if not v:
            raise InvalidInput(f"{f} fails the iwip heuristic: {v.reason}")
    seeds = []
    for f in (phi, psi):
        seeds.append(_iterate(f, "a", depth))
        seeds.append(_iterate(f.inverse(), "a", depth))
    fills = common_proper_factor([ConjClass(w, phi.rank) for w in seeds]).fills
    gens = _generators(phi, psi, k)
    verdict = free_up_to(gens, L, phi.rank)
    return SchottkySpec(phi, psi, k, L, verdict, fills, gens)


@dataclass
class OrbitFit:
    c: float
    c_prime: float
    residual: float  # root mean square of the regression on per-length minima
    upper_slope: float
    per_length_min: dict
    distances: dict  # word -> d(T, gT)
    shadow_total: int = 0
    shadow_certified: int = 0
    shadow_rows: list = field(default_factory=list)

    @property
    def shadow_fraction(self):
        return self.shadow_certified / self.shadow_total if self.shadow_total else 0.0


def _fit(points):
    """Least squares line through (x, y)."""
    n = len(points)
    mx = sum(x for x, _ in points) / n
    my = sum(y for _, y in points) / n
    sxx = sum((x - mx) ** 2 for x, _ in points)
    if sxx == 0:
        return 0.0, my, 0.0
    slope = sum((x - mx) * (y - my) for x, y in points) / sxx
    icept = my - slope * mx
    rms = math.sqrt(sum((y - slope * x - icept) ** 2 for x, y in points) / n)
    return slope, icept, rms


def orbit_qi_experiment(spec, T, L, shadow_from=3):
    if not spec.verdict.free or spec.verdict.L < L:
        raise InvalidInput(f"the Schottky group is not certified free up to length {L}")
    distances = {}
    base = upsilon(T)
    fit = OrbitFit(0.0, 0.0, 0.0, 0.0, {}, distances)
    for w in words_up_to(L):
        if not w:
            continue
        gT = act(T, spec.automorphism(w), check=False)
        d = sym_distance(T, gT).value
        distances[w] = d
        n = len(w)
        fit.per_length_min[n] = min(fit.per_length_min.get(n, math.inf), d)
        if n >= shadow_from:
            other = upsilon(gT, w)
            fit.shadow_total += 1
            if other.cls in (base.cls, base.cls.inverse()):
                kind = "same"
            else:
                kind = ff_leq2(base.cls, other.cls).kind
            fit.shadow_certified += kind == "geq3"
            fit.shadow_rows.append((w, str(other.cls), kind))
    pts = sorted(fit.per_length_min.items())
    fit.c, _, fit.residual = _fit(pts)
    fit.c_prime = max(fit.c * len(w) - d for w, d in distances.items())
    fit.upper_slope = max(d / len(w) for w, d in distances.items())
    return fit
