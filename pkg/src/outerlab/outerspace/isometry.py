"""Marked isometry of small marked metric graphs by exhaustive labelling search."""
from __future__ import annotations

from itertools import permutations, product

from ..freegroup.automorphisms import inner_conjugator
from ..freegroup.words import reduce_word
from .graph import edge_letter


def _edge_maps(S, T, vmap):
    """All directed-edge bijections over a vertex bijection that preserve lengths."""
    groups = {}
    for j, (u, v) in enumerate(T.edges):
        groups.setdefault((u, v, T.lengths[j]), []).append(j)
    choices = []
    for i, (u, v) in enumerate(S.edges):
        a, b = vmap[u], vmap[v]
        q = S.lengths[i]
        opts = [(j, True) for j in groups.get((a, b, q), [])]
        opts += [(j, False) for j in groups.get((b, a, q), [])]
        choices.append(opts)
    for combo in product(*choices):
        if len({j for j, _ in combo}) == len(combo):
            yield combo


def isometries(S, T):
    """Yield letter translation tables for every isometry S -> T of metric graphs."""
    if (S.rank, S.num_vertices, S.num_edges) != (T.rank, T.num_vertices, T.num_edges):
        return
    if sorted(S.lengths) != sorted(T.lengths):
        return
    for perm in permutations(range(T.num_vertices)):
        if any(S.valence(v) != T.valence(perm[v]) for v in range(S.num_vertices)):
            continue
        for combo in _edge_maps(S, T, perm):
            table = {}
            for i, (j, fwd) in enumerate(combo):
                table[edge_letter(i)] = edge_letter(j, fwd)
                table[edge_letter(i, False)] = edge_letter(j, not fwd)
            yield perm, table


def is_marked_isometric(S, T):
    """True iff some isometry S -> T carries the marking of S to that of T up to free homotopy.

    For an isometry h the composite x -> omega_T(h(m_S(x))) must be an inner
    automorphism; it is decided by the conjugator search.
    """
    for _, table in isometries(S, T):
        trans = str.maketrans(table)
        images = [reduce_word(T.read_word(p.translate(trans))) for p in S.marking]
        if inner_conjugator(images, S.rank) is not None:
            return True
    return False
