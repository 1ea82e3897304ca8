"""Lines of minima and the balancing projection."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from ..laminations import RationalLamination, balance_param, fills_certificate
from ..outerspace.lipschitz import sym_distance
from ..outerspace.loops import systole
from .search import search

log = logging.getLogger(__name__)

REL_ERROR_BITS = 40


def exp_half(t, bits=REL_ERROR_BITS):
    """Dyadic rational approximation of e^{t/2} with relative error <= 2^-bits."""
    with mpmath.workprec(bits + 64):
        t = Fraction(t)
        v = mpmath.exp(mpmath.mpf(t.numerator) / t.denominator / 2)
        shift = bits + 2 - int(mpmath.floor(mpmath.log(v, 2)))
        num = int(mpmath.nint(v * mpmath.mpf(2) ** shift))
    q = Fraction(num, 2 ** shift) if shift >= 0 else Fraction(num * 2 ** -shift)
    return q


def make_grid(start, stop, step):
    start, stop, step = Fraction(start), Fraction(stop), Fraction(step)
    n = int((stop - start) / step)
    return tuple(start + k * step for k in range(n + 1))


@dataclass
class LineOfMinima:
    mu: RationalLamination
    nu: RationalLamination
    eps: Fraction
    grid: tuple
    points: tuple
    values: tuple
    weights: tuple  # (approx e^{t/2}, approx e^{-t/2}) per grid value
    products: dict = field(default_factory=dict)  # (i, j) -> exact stretch product
    kappa_emp: float = 0.0
    certified_pair: bool = True
    search_steps: tuple = ()

    def distance(self, i, j):
        if i == j:
            return 0.0
        key = (min(i, j), max(i, j))
        if key not in self.products:
            self.products[key] = sym_distance(self.points[key[0]], self.points[key[1]]).product
        return math.log(self.products[key])

    def index_of(self, t):
        return self.grid.index(Fraction(t))

    def at(self, t):
        return self.points[self.index_of(t)]

    def table(self):
        """Rows (t, objective value, systole, distance to previous point)."""
        rows = []
        for k, t in enumerate(self.grid):
            prev = self.distance(k - 1, k) if k else 0.0
            rows.append((t, self.values[k], systole(self.points[k]), prev))
        return rows


def objective(mu, nu, t):
    wp, wm = exp_half(t), exp_half(-t)
    return mu.scale(wp) + nu.scale(wm), (wp, wm)


def measure_kappa(line):
    k = 0.0
    n = len(line.grid)
    for i in range(n):
        for j in range(i + 1, n):
            gap = float(line.grid[j] - line.grid[i])
            k = max(k, abs(line.distance(i, j) - gap))
    return k


def line_of_minima(mu, nu, eps, grid, seed=None):
    """gamma(t) in Min_eps(e^{t/2} mu + e^{-t/2} nu) on an increasing grid, warm-started."""
    eps = Fraction(eps)
    grid = tuple(sorted(Fraction(t) for t in grid))
    cert = fills_certificate(mu, nu)
    if not cert.certified:
        log.warning("pair is not fills-certified (%s); the line may be degenerate", cert.label)
    points, values, weights, steps = [], [], [], []
    cur = seed
    for t in grid:
        lam, w = objective(mu, nu, t)
        cur, value, stats = search(lam, eps, cur)
        points.append(cur)
        values.append(value)
        weights.append(w)
        steps.append(stats.steps)
    line = LineOfMinima(mu, nu, eps, grid, tuple(points), tuple(values), tuple(weights),
                        certified_pair=cert.certified, search_steps=tuple(steps))
    line.kappa_emp = measure_kappa(line)
    return line


@dataclass(frozen=True)
class Projection:
    index: int
    t: Fraction
    t_star: float
    exp_t_star: Fraction
    clamped: bool
    point: object


def balancing_projection(line, T):
    """Grid point nearest the balance parameter of T (ties to the smaller t)."""
    bal = balance_param(T, line.mu, line.nu)
    ts = bal.t
    best = None
    for k, t in enumerate(line.grid):
        gap = abs(float(t) - ts)
        if best is None or gap < best[0]:
            best = (gap, k)
    k = best[1]
    clamped = ts < float(line.grid[0]) or ts > float(line.grid[-1])
    return Projection(k, line.grid[k], ts, bal.exp_t, clamped, line.points[k])
