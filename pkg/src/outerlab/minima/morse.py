"""Empirical Morse test: certified quasi-geodesic chains with endpoints on the axis."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import InvalidInput
from ..outerspace.graph import act, blow_up, blow_up_partitions
from ..outerspace.lipschitz import lipschitz_stretch
from ..outerspace.sampling import random_automorphism


@dataclass
class Chain:
    start: int  # grid indices of the endpoints
    stop: int
    params: tuple
    points: tuple
    kinds: tuple


@dataclass
class MorseReport:
    K: float
    budget: int
    attempted: int
    certified: int
    M_emp: float | None
    worst: dict | None = None
    per_kind: dict = field(default_factory=dict)

    @property
    def inconclusive(self):
        return self.certified == 0

    @property
    def rate(self):
        return self.certified / self.attempted if self.attempted else 0.0

    def to_dict(self):
        return {
            "K": self.K,
            "budget": self.budget,
            "attempted": self.attempted,
            "certified": self.certified,
            "certification_rate": self.rate,
            "M_emp": self.M_emp,
            "inconclusive": self.inconclusive,
            "worst": self.worst,
            "per_kind": self.per_kind,
        }


FACTORS = (Fraction(1, 2), Fraction(1), Fraction(2))  # per-edge rescalings before renormalising


def _dl(S, T):
    return math.log(lipschitz_stretch(S, T).value)


def is_quasi_geodesic(params, points, K):
    """|s-t|/K - K <= d_L(x_s, x_t) <= K|s-t| + K for every ordered index pair."""
    n = len(points)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            gap = abs(float(params[j] - params[i]))
            d = _dl(points[i], points[j])
            if d > K * gap + K or d < gap / K - K:
                return False
    return True


def redistribute(g, rng):
    lengths = [q * rng.choice(FACTORS) for q in g.lengths]
    total = sum(lengths)
    return g.with_lengths([q / total for q in lengths])


def perturb(g, rng):
    """One of: new lengths on the same marked graph, a Whitehead re-marking, a small blow-up."""
    kind = rng.choice(("lengths", "remark", "blowup"))
    if kind == "lengths":
        return redistribute(g, rng), kind
    if kind == "remark":
        return act(g, random_automorphism(g.rank, rng, 1)), kind
    verts = [v for v in range(g.num_vertices) if g.valence(v) >= 4]
    if not verts:
        return redistribute(g, rng), "lengths"
    v = rng.choice(verts)
    h = blow_up(g, v, rng.choice(blow_up_partitions(g, v)))
    lengths = list(h.lengths)
    lengths[-1] = min(lengths[:-1]) / 2
    total = sum(lengths)
    return h.with_lengths([q / total for q in lengths]), kind


def random_chain(line, rng, p=0.5, min_span=2):
    n = len(line.grid)
    if n < 2:
        raise InvalidInput("grid too short for chains")
    span = min(max(min_span, 1), n - 1)
    i = rng.randrange(0, n - span)
    j = rng.randrange(i + span, n)
    pts, kinds = [line.points[i]], ["axis"]
    for k in range(i + 1, j):
        if rng.random() < p:
            g, kind = perturb(line.points[k], rng)
        else:
            g, kind = line.points[k], "axis"
        pts.append(g)
        kinds.append(kind)
    pts.append(line.points[j])
    kinds.append("axis")
    return Chain(i, j, line.grid[i : j + 1], tuple(pts), tuple(kinds))


def distance_to_axis(line, g):
    return min(lipschitz_stretch(g, p).log + lipschitz_stretch(p, g).log for p in line.points)


def morse_test(line, K, budget, seed=0, max_attempts=None):
    """Score up to ``budget`` certified chains; M_emp is their largest distance to the axis."""
    if K < 1:
        raise InvalidInput("K must be at least 1")
    rng = random.Random(seed)
    max_attempts = 20 * budget if max_attempts is None else max_attempts
    rep = MorseReport(K, budget, 0, 0, None)
    cache = {}
    while rep.certified < budget and rep.attempted < max_attempts:
        chain = random_chain(line, rng)
        rep.attempted += 1
        if not is_quasi_geodesic(chain.params, chain.points, K):
            continue
        rep.certified += 1
        for g, kind in zip(chain.points, chain.kinds):
            if g not in cache:
                cache[g] = distance_to_axis(line, g)
            d = cache[g]
            rep.per_kind[kind] = max(rep.per_kind.get(kind, 0.0), d)
            if rep.M_emp is None or d > rep.M_emp:
                rep.M_emp = d
                rep.worst = {"graph": g.to_dict(), "kind": kind, "distance": d}
    return rep
