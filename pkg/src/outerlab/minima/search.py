"""Minimisation of a lamination's length over the thick part of Outer space.

Each simplex (topology + marking) is an exact LP in the edge lengths.  The
search moves between simplices that share a face and stops when no
neighbouring simplex has a strictly smaller optimum.  This certifies a local
minimum only.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import Infeasible, InvalidInput
from ..freegroup.whitehead import whitehead_automorphisms
from ..outerspace.graph import MarkedGraph, act, blow_up, blow_up_partitions, collapse, rose
from ..outerspace.loops import embedded_circles
from .lp import solve

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimplexProgram:
    """min sum_e c_e l_e over the closed simplex of ``graph`` with volume 1 and circles >= eps."""

    graph: MarkedGraph
    objective: tuple
    eps: Fraction

    @classmethod
    def build(cls, graph, lam, eps):
        if lam.rank != graph.rank:
            raise InvalidInput("rank mismatch")
        coeffs = [Fraction(0)] * graph.num_edges
        for c, w in lam.support:
            for i, k in enumerate(graph.occupancy(c)):
                if k:
                    coeffs[i] += w * k
        return cls(graph, tuple(coeffs), Fraction(eps))

    def constraints(self):
        E = self.graph.num_edges
        rows, rhs = [], []
        for cyc in embedded_circles(self.graph):
            row = [0] * E
            for d in cyc:
                row[ord(d.lower()) - ord("a")] = 1
            rows.append(row)
            rhs.append(self.eps)
        return rows, rhs

    def feasible_point(self, lengths):
        lengths = [Fraction(q) for q in lengths]
        if any(q < 0 for q in lengths) or sum(lengths) != 1:
            return False
        rows, rhs = self.constraints()
        return all(sum(r * q for r, q in zip(row, lengths)) >= b for row, b in zip(rows, rhs))

    def evaluate(self, lengths):
        return sum((c * q for c, q in zip(self.objective, lengths)), Fraction(0))


@dataclass(frozen=True)
class SimplexSolution:
    lengths: tuple
    value: Fraction
    graph: MarkedGraph  # lengths applied and zero edges collapsed


def simplex_min(prog):
    """Exact LP optimum on one simplex, or None when the thick constraints are infeasible."""
    E = prog.graph.num_edges
    rows, rhs = prog.constraints()
    res = solve(prog.objective, A_eq=[[1] * E], b_eq=[1], A_ge=rows, b_ge=rhs)
    if res.status != "optimal":
        return None
    lengths = tuple(res.x)
    g = prog.graph.with_lengths(lengths, check=False)
    zero = [i for i, q in enumerate(lengths) if q == 0]
    if zero:
        g = collapse(g, zero, check=False)
    g = g.check()
    return SimplexSolution(lengths, res.value, g)


def neighbours(g):
    """Simplices sharing a face with the simplex of g, plus Whitehead re-markings of a rose."""
    out = []
    for v in range(g.num_vertices):
        for part in blow_up_partitions(g, v):
            out.append(blow_up(g, v, part))
    for i, (u, v) in enumerate(g.edges):
        if u == v:
            continue
        h = collapse(g, [i], check=False)
        # collapse keeps the smaller endpoint index for the merged vertex
        x = min(u, v)
        for part in blow_up_partitions(h, x):
            out.append(blow_up(h, x, part))
    if g.num_vertices == 1:
        for mv in whitehead_automorphisms(g.rank):
            out.append(act(g, mv, check=False))
    return out


@dataclass
class SearchStats:
    steps: int = 0
    programs: int = 0
    trail: list = field(default_factory=list)


def search(lam, eps, seed=None, max_steps=10000):
    """Local search; returns (graph, value, stats)."""
    eps = Fraction(eps)
    if eps <= 0:
        raise InvalidInput("epsilon must be positive")
    seed = seed if seed is not None else rose(lam.rank)
    stats = SearchStats()
    cache = {}

    def solve_at(g):
        key = g.topology_key()
        if key not in cache:
            stats.programs += 1
            cache[key] = simplex_min(SimplexProgram.build(g, lam, eps))
        return cache[key]

    sol = solve_at(seed)
    if sol is None:
        raise Infeasible(f"epsilon {eps} is infeasible on the seed simplex")
    cur, value = sol.graph, sol.value
    stats.trail.append(value)
    while stats.steps < max_steps:
        best = None
        for nb in neighbours(cur):
            s = solve_at(nb)
            if s is not None and s.value < value and (best is None or s.value < best.value):
                best = s
        if best is None:
            return cur, value, stats
        cur, value = best.graph, best.value
        stats.steps += 1
        stats.trail.append(value)
    log.warning("min_search stopped after %d steps without certifying a local minimum", max_steps)
    return cur, value, stats


def min_search(lam, eps, seed=None):
    """Certified local minimum of T -> <T, lam> over Thick_eps."""
    return search(lam, eps, seed)[0]


def is_local_minimum(g, lam, eps):
    value = SimplexProgram.build(g, lam, eps).evaluate(g.lengths)
    own = simplex_min(SimplexProgram.build(g, lam, eps))
    if own is None or own.value < value:
        return False
    for nb in neighbours(g):
        s = simplex_min(SimplexProgram.build(nb, lam, eps))
        if s is not None and s.value < value:
            return False
    return True
