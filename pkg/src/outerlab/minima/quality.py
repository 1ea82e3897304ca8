"""Empirical contraction tests for a computed line of minima."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from ..outerspace.lipschitz import lipschitz_stretch
from .contracting import sample_pool
from .line import balancing_projection


@dataclass
class Violation:
    item: int
    i: int
    j: int
    lhs: float
    rhs: float


@dataclass
class QualityReport:
    kappa: float
    samples: int
    pairs_checked: int
    nearest_checked: int
    clamped: int
    violations: list = field(default_factory=list)
    max_excess: dict = field(default_factory=dict)  # item -> largest rhs - lhs seen
    kappa_required: float = 0.0  # smallest kappa with no violation on this sample

    @property
    def violation_count(self):
        return len(self.violations)

    def to_dict(self):
        return {
            "kappa_emp": self.kappa,
            "samples": self.samples,
            "pairs_checked": self.pairs_checked,
            "nearest_checked": self.nearest_checked,
            "clamped": self.clamped,
            "violations": [v.__dict__ for v in self.violations],
            "max_excess": {str(k): v for k, v in self.max_excess.items()},
            "kappa_required": self.kappa_required,
        }


class _Dist:
    """Cached one-sided distances between trees held in a list."""

    def __init__(self, trees):
        self.trees = trees
        self.cache = {}

    def dl(self, i, j):
        if i == j:
            return 0.0
        if (i, j) not in self.cache:
            self.cache[(i, j)] = math.log(lipschitz_stretch(self.trees[i], self.trees[j]).value)
        return self.cache[(i, j)]

    def d(self, i, j):
        return self.dl(i, j) + self.dl(j, i)


def axis_quality(line, samples, seed=0, kappa=None, pool=None):
    """Check the contraction inequalities and the nearest-point property at kappa_emp.

    Sample trees are random graphs re-marked onto random axis points.  Pairs whose
    projections are at least kappa apart must satisfy the one-sided and symmetric
    inequalities; every grid point within 1 of the closest one must lie within
    kappa of the projection.
    """
    kappa = line.kappa_emp if kappa is None else kappa
    rng = random.Random(seed)
    if pool is None:
        pool = sample_pool(line.mu.rank, rng, samples, anchors=line.points)
    n_axis = len(line.points)
    trees = list(line.points) + list(pool)
    D = _Dist(trees)
    proj, clamped = [], 0
    for S in pool:
        p = balancing_projection(line, S)
        proj.append(p.index)
        clamped += p.clamped
    rep = QualityReport(kappa, len(pool), 0, 0, clamped, max_excess={1: -math.inf, 2: -math.inf, 3: -math.inf})

    def note(item, i, j, lhs, rhs):
        rep.max_excess[item] = max(rep.max_excess[item], rhs - lhs)
        if lhs < rhs:
            rep.violations.append(Violation(item, i, j, lhs, rhs))

    # a pair is tested at kappa iff sep >= kappa and then fails iff lhs < full - kappa,
    # so it fails for exactly the kappa <= min(sep, full - lhs) (up to the strict edge)
    required = 0.0
    for a in range(len(pool)):
        ta, pa = n_axis + a, proj[a]
        for b in range(len(pool)):
            if a == b:
                continue
            tb, pb = n_axis + b, proj[b]
            sep = D.d(pa, pb)
            one = D.dl(ta, pa) + D.dl(pa, pb) + D.dl(pb, tb) - D.dl(ta, tb)
            required = max(required, min(sep, one))
            two = None
            if a < b:
                two = D.d(ta, pa) + sep + D.d(pb, tb) - D.d(ta, tb)
                required = max(required, min(sep, two))
            if sep < kappa:
                continue
            rep.pairs_checked += 1
            note(1, a, b, D.dl(ta, tb), D.dl(ta, tb) + one - kappa)
            if two is not None:
                note(2, a, b, D.d(ta, tb), D.d(ta, tb) + two - kappa)
    for a in range(len(pool)):
        ta = n_axis + a
        ds = [D.d(ta, k) for k in range(n_axis)]
        best = min(ds)
        for k in range(n_axis):
            if ds[k] <= best + 1:
                rep.nearest_checked += 1
                gap = D.d(k, proj[a])
                required = max(required, gap)
                note(3, a, k, kappa, gap)
    rep.kappa_required = required
    return rep
