"""Random marked graphs for tests and experiments."""
from __future__ import annotations

import random
from fractions import Fraction

from ..freegroup.automorphisms import Automorphism, compose
from ..freegroup.whitehead import whitehead_automorphisms
from .graph import act, blow_up, blow_up_partitions, from_topology, regauge, rose, spanning_tree


def random_topology(rank, rng, blowups=None):
    """Random graph obtained from the rose by random blow-ups."""
    g = rose(rank, check=False)
    max_blowups = 2 * rank - 3
    k = rng.randint(0, max_blowups) if blowups is None else blowups
    for _ in range(k):
        verts = [v for v in range(g.num_vertices) if g.valence(v) >= 4]
        if not verts:
            break
        v = rng.choice(verts)
        g = blow_up(g, v, rng.choice(blow_up_partitions(g, v)))
    return g


def random_lengths(n, rng, lo=1, hi=20):
    raw = [Fraction(rng.randint(lo, hi)) for _ in range(n)]
    total = sum(raw)
    return [q / total for q in raw]


def random_automorphism(rank, rng, steps):
    moves = whitehead_automorphisms(rank)
    phi = Automorphism.identity(rank)
    for _ in range(steps):
        phi = compose(phi, rng.choice(moves))
    return phi


def random_marked_graph(rank, rng, twist=2, blowups=None, hi=20):
    g = random_topology(rank, rng, blowups)
    g = g.with_lengths(random_lengths(g.num_edges, rng, hi=hi), check=False)
    if twist:
        g = act(g, random_automorphism(rank, rng, rng.randint(0, twist)), check=False)
    return g.check()


def relabelled_copy(g, rng):
    """A marked-isometric copy with permuted vertices/edges, flipped edges and a new tree."""
    nv, ne = g.num_vertices, g.num_edges
    vperm = list(range(nv))
    rng.shuffle(vperm)
    eperm = list(range(ne))
    rng.shuffle(eperm)
    flips = [rng.random() < 0.5 for _ in range(ne)]
    new_edges = [None] * ne
    lengths = [None] * ne
    table = {}
    for i, (u, v) in enumerate(g.edges):
        j = eperm[i]
        a, b = vperm[u], vperm[v]
        if flips[i]:
            a, b = b, a
        new_edges[j] = (a, b)
        lengths[j] = g.lengths[i]
        fwd = chr(ord("a") + j)
        table[chr(ord("a") + i)] = fwd.upper() if flips[i] else fwd
        table[chr(ord("A") + i)] = fwd if flips[i] else fwd.upper()
    trans = str.maketrans(table)
    marking = tuple(p.translate(trans) for p in g.marking)
    inv = [None] * ne
    for i in range(ne):
        w = g.inverse_marking[i]
        inv[eperm[i]] = w[::-1].swapcase() if flips[i] else w
    tree = tuple(sorted(eperm[i] for i in g.tree))
    from .graph import MarkedGraph

    h = MarkedGraph(g.rank, nv, tuple(new_edges), tuple(lengths), marking, tuple(inv), vperm[g.basepoint], tree)
    # a different spanning tree exercises the gauge change as well
    order = list(range(ne))
    rng.shuffle(order)
    h = regauge(h, spanning_tree(nv, h.edges, h.basepoint, prefer=order))
    return h.check()
