"""Embedded circles, candidate loops and translation lengths."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import InvalidInput
from ..freegroup.words import ConjClass, inverse
from .graph import edge_index, edge_letter


def translation_length(T, alpha):
    """Length of the tight loop representing alpha in T (exact rational)."""
    alpha = ConjClass.of(alpha, T.rank)
    if alpha.trivial:
        raise InvalidInput("translation length of the trivial class")
    return T.length_of(alpha)


def _rotate_to(cycle, T, v):
    """Rotate a directed cycle so that it starts at vertex v."""
    for k, d in enumerate(cycle):
        if T.tail(d) == v:
            return cycle[k:] + cycle[:k]
    raise ValueError("vertex not on cycle")


def _cycle_vertices(T, cycle):
    return {T.tail(d) for d in cycle}


def embedded_circles(T):
    """Every embedded circle once, as a directed edge cycle; deterministic order."""
    return _circles(T.num_vertices, T.edges)


@lru_cache(maxsize=4096)
def _circles(nv, edges):
    out = []
    seen = set()
    half = {v: [] for v in range(nv)}
    for i, (u, v) in enumerate(edges):
        half[u].append((edge_letter(i), v))
        half[v].append((edge_letter(i, False), u))

    for s in range(nv):
        # simple cycles whose least vertex is s
        stack = [(s, "", frozenset([s]), frozenset())]
        while stack:
            u, path, verts, used = stack.pop()
            for d, w in half[u]:
                i = edge_index(d)
                if i in used:
                    continue
                if w == s:
                    cyc = path + d
                    key = frozenset(edge_index(x) for x in cyc)
                    if key not in seen:
                        seen.add(key)
                        out.append(cyc)
                elif w > s and w not in verts:
                    stack.append((w, path + d, verts | {w}, used | {i}))
    out.sort(key=lambda c: (len(c), sorted(edge_index(x) for x in c), c))
    return tuple(out)


@dataclass(frozen=True)
class Candidate:
    loop: str
    cls: ConjClass
    tag: str


@dataclass(frozen=True)
class CandidateSet:
    loops: tuple
    source: int

    def classes(self):
        return [c.cls for c in self.loops]

    def __iter__(self):
        return iter(self.loops)

    def __len__(self):
        return len(self.loops)


def _arcs_between(T, a_set, b_set):
    """Simple edge paths from a vertex of a_set to a vertex of b_set with interior avoiding both."""
    out = []
    for s in sorted(a_set):
        stack = [(s, "", frozenset([s]))]
        while stack:
            u, path, verts = stack.pop()
            for d in T.half_edges[u]:
                w = T.head(d)
                if w in verts or w in a_set:
                    continue
                if w in b_set:
                    out.append(path + d)
                    continue
                stack.append((w, path + d, verts | {w}))
    out.sort(key=lambda p: (len(p), p))
    return out


def candidate_loops(T):
    """Embedded circles, figure-eights and barbells of T as directed edge loops with tags."""
    circles = embedded_circles(T)
    loops = [(c, "embedded-circle") for c in circles]
    vsets = [_cycle_vertices(T, c) for c in circles]
    esets = [{edge_index(d) for d in c} for c in circles]
    for i in range(len(circles)):
        for j in range(i + 1, len(circles)):
            if esets[i] & esets[j]:
                continue
            common = vsets[i] & vsets[j]
            if len(common) == 1:
                (v,) = common
                c1 = _rotate_to(circles[i], T, v)
                c2 = _rotate_to(circles[j], T, v)
                loops.append((c1 + c2, "figure-eight"))
                loops.append((c1 + inverse(c2), "figure-eight"))
            elif not common:
                for arc in _arcs_between(T, vsets[i], vsets[j]):
                    c1 = _rotate_to(circles[i], T, T.tail(arc[0]))
                    c2 = _rotate_to(circles[j], T, T.head(arc[-1]))
                    loops.append((c1 + arc + c2 + inverse(arc), "barbell"))
                    loops.append((c1 + arc + inverse(c2) + inverse(arc), "barbell"))
    return loops


_CANDIDATE_CACHE = {}


def candidates(T):
    """Candidate classes of T; the Lipschitz stretch out of T is attained on one of them."""
    key = T.topology_key()
    hit = _CANDIDATE_CACHE.get(key)
    if hit is not None:
        return hit
    out = []
    seen = set()
    for loop, tag in candidate_loops(T):
        cls = T.loop_class(loop)
        if cls not in seen:
            seen.add(cls)
            out.append(Candidate(loop, cls, tag))
    result = CandidateSet(tuple(out), hash(key))
    if len(_CANDIDATE_CACHE) > 20000:
        _CANDIDATE_CACHE.clear()
    _CANDIDATE_CACHE[key] = result
    return result


def systole(T):
    return min(T.path_length(c) for c in embedded_circles(T))


def systole_thick(T, eps):
    """(systole, systole >= eps); the shortest loop is always an embedded circle."""
    eps = Fraction(eps)
    if eps <= 0:
        raise InvalidInput("epsilon must be positive")
    s = systole(T)
    return s, s >= eps


def tight_loops_up_to(T, bound, max_paths=10 ** 5):
    """Classes of all tight loops of metric length <= bound.

    Returns (sorted list of (length, ConjClass), paths explored).
    Each cyclic loop is enumerated from occurrences of its least edge letter.
    """
    bound = Fraction(bound)
    order = {}
    for i in range(T.num_edges):
        order[edge_letter(i)] = 2 * i
        order[edge_letter(i, False)] = 2 * i + 1
    found = {}
    explored = 0
    for first in sorted(order, key=order.get):
        start = T.tail(first)
        stack = [(first, T.lengths[edge_index(first)])]
        while stack:
            path, length = stack.pop()
            explored += 1
            if explored > max_paths:
                raise OverflowError(f"more than {max_paths} paths below length {bound}")
            last = path[-1]
            v = T.head(last)
            if v == start and path[0] != last.swapcase():
                cls = T.loop_class(path)
                if cls not in found:
                    found[cls] = length
            for d in T.half_edges[v]:
                if d == last.swapcase() or order[d] < order[first]:
                    continue
                nl = length + T.lengths[edge_index(d)]
                if nl <= bound:
                    stack.append((path + d, nl))
    items = sorted(((q, c) for c, q in found.items()), key=lambda t: (t[0], t[1]))
    return items, explored
