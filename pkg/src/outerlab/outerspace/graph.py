"""Marked metric graphs: points of volume-one Outer space.

Edges are numbered 0..E-1 and written as letters in edge paths: edge i is
``chr(ord('a') + i)`` traversed forward and the capital letter traversed
backward.  A graph carries both marking directions:

* ``marking[k]``: reduced edge loop at the basepoint representing x_k;
* ``inverse_marking[i]``: word of F_n read when crossing edge i forward.

Edges of the recorded spanning tree always read the empty word.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ..errors import InvalidInput
from ..freegroup.automorphisms import Automorphism, apply_images
from ..freegroup.words import ConjClass, cyclic_reduce, inverse, reduce_word

ONE = Fraction(1)


def edge_letter(i, forward=True):
    ch = chr(ord("a") + i)
    return ch if forward else ch.upper()


def edge_index(ch):
    return ord(ch.lower()) - ord("a")


def parse_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise InvalidInput("lengths must be exact rationals, not floats")
    return Fraction(x)


def format_fraction(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, eq=False)
class MarkedGraph:
    rank: int
    num_vertices: int
    edges: tuple
    lengths: tuple
    marking: tuple
    inverse_marking: tuple
    basepoint: int = 0
    tree: tuple = ()

    # -- structure ------------------------------------------------------
    def tail(self, d):
        i = edge_index(d)
        return self.edges[i][0] if d.islower() else self.edges[i][1]

    def head(self, d):
        i = edge_index(d)
        return self.edges[i][1] if d.islower() else self.edges[i][0]

    @property
    def num_edges(self):
        return len(self.edges)

    @cached_property
    def half_edges(self):
        """Directed edges leaving each vertex."""
        out = {v: [] for v in range(self.num_vertices)}
        for i, (u, v) in enumerate(self.edges):
            out[u].append(edge_letter(i))
            out[v].append(edge_letter(i, False))
        return out

    def valence(self, v):
        return len(self.half_edges[v])

    @property
    def volume(self):
        return sum(self.lengths, Fraction(0))

    def path_length(self, path):
        return sum((self.lengths[edge_index(d)] for d in path), Fraction(0))

    @cached_property
    def tree_paths(self):
        """Reduced tree path from the basepoint to each vertex."""
        paths = {self.basepoint: ""}
        tree = set(self.tree)
        stack = [self.basepoint]
        while stack:
            u = stack.pop()
            for d in self.half_edges[u]:
                if edge_index(d) in tree:
                    v = self.head(d)
                    if v not in paths:
                        paths[v] = paths[u] + d
                        stack.append(v)
        return paths

    # -- markings -------------------------------------------------------
    def edge_loop(self, w):
        """Reduced edge loop at the basepoint representing the word w."""
        return apply_images(self.marking, w)

    def read_word(self, path):
        """Word of F_n read along an edge path (reduced)."""
        return apply_images(self.inverse_marking, path)

    def loop_class(self, path):
        return ConjClass(self.read_word(path), self.rank)

    def tight_loop(self, alpha):
        """Cyclically reduced edge loop in the free homotopy class of alpha."""
        word = alpha.word if isinstance(alpha, ConjClass) else alpha
        return cyclic_reduce(self.edge_loop(word))[1]

    def occupancy(self, alpha):
        counts = [0] * self.num_edges
        for d in self.tight_loop(alpha):
            counts[edge_index(d)] += 1
        return counts

    def length_of(self, alpha):
        return self.path_length(self.tight_loop(alpha))

    # -- validation -----------------------------------------------------
    def check(self, require_volume_one=True):
        """Raise InvalidInput unless every invariant of a point of cv_0 holds."""
        n, V, E = self.rank, self.num_vertices, self.num_edges
        if E - V + 1 != n:
            raise InvalidInput(f"Betti number {E - V + 1} != rank {n}")
        if len(self.lengths) != E or len(self.inverse_marking) != E or len(self.marking) != n:
            raise InvalidInput("field lengths disagree with the edge count")
        for u, v in self.edges:
            if not (0 <= u < V and 0 <= v < V):
                raise InvalidInput("edge endpoint out of range")
        for v in range(V):
            if self.valence(v) < 3:
                raise InvalidInput(f"vertex {v} has valence {self.valence(v)} < 3")
        if len(self.tree) != V - 1 or len(self.tree_paths) != V:
            raise InvalidInput("recorded spanning tree does not span")
        if any(q <= 0 for q in self.lengths):
            raise InvalidInput("edge lengths must be positive")
        if require_volume_one and self.volume != 1:
            raise InvalidInput(f"volume {self.volume} != 1")
        for i in self.tree:
            if self.inverse_marking[i]:
                raise InvalidInput("tree edge reads a nontrivial word")
        for k, path in enumerate(self.marking):
            if reduce_word(path) != path or not path:
                raise InvalidInput("marking loops must be reduced and nontrivial")
            if self.tail(path[0]) != self.basepoint or self.head(path[-1]) != self.basepoint:
                raise InvalidInput("marking loop is not based at the basepoint")
            for a, b in zip(path, path[1:]):
                if self.head(a) != self.tail(b):
                    raise InvalidInput("marking loop is not an edge path")
            if self.read_word(path) != chr(ord("a") + k):
                raise InvalidInput(f"inverse marking does not undo the marking on {chr(ord('a') + k)}")
        tp = self.tree_paths
        tree = set(self.tree)
        for i, (u, v) in enumerate(self.edges):
            if i in tree:
                continue
            loop = reduce_word(tp[u] + edge_letter(i) + inverse(tp[v]))
            if self.edge_loop(self.inverse_marking[i]) != loop:
                raise InvalidInput("marking does not undo the inverse marking")
        return self

    # -- equality / hashing on exact data ------------------------------
    def key(self):
        return (self.rank, self.num_vertices, self.edges, self.lengths, self.marking,
                self.inverse_marking, self.basepoint, self.tree)

    def __eq__(self, other):
        return isinstance(other, MarkedGraph) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def topology_key(self):
        return (self.rank, self.num_vertices, self.edges, self.marking, self.inverse_marking,
                self.basepoint, self.tree)

    # -- constructions --------------------------------------------------
    def with_lengths(self, lengths, check=True):
        g = MarkedGraph(self.rank, self.num_vertices, self.edges,
                        tuple(parse_fraction(q) for q in lengths),
                        self.marking, self.inverse_marking, self.basepoint, self.tree)
        return g.check() if check else g

    def normalized(self):
        vol = self.volume
        return self.with_lengths([q / vol for q in self.lengths])

    def to_dict(self):
        return {
            "rank": self.rank,
            "vertices": list(range(self.num_vertices)),
            "edges": [
                {"tail": u, "head": v, "length": format_fraction(q)}
                for (u, v), q in zip(self.edges, self.lengths)
            ],
            "basepoint": self.basepoint,
            "tree": list(self.tree),
            "marking": {chr(ord("a") + k): p for k, p in enumerate(self.marking)},
            "inverse_marking": list(self.inverse_marking),
        }

    def dumps(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data, require_volume_one=True):
        try:
            rank = int(data["rank"])
            vertices = list(data["vertices"])
            if vertices != list(range(len(vertices))):
                raise InvalidInput("vertices must be 0..V-1")
            edges = tuple((int(e["tail"]), int(e["head"])) for e in data["edges"])
            lengths = tuple(parse_fraction(e["length"]) for e in data["edges"])
            marking = tuple(data["marking"][chr(ord("a") + k)] for k in range(rank))
            if "inverse_marking" in data:
                inv = tuple(data["inverse_marking"])
                tree = tuple(int(i) for i in data["tree"])
                base = int(data.get("basepoint", 0))
                g = cls(rank, len(vertices), edges, lengths, marking, inv, base, tree)
            else:
                g = from_topology(rank, edges, lengths, basepoint=int(data.get("basepoint", 0)), check=False)
                g = _remark_by_loops(g, marking)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidInput):
                raise
            raise InvalidInput(f"malformed marked graph: {exc}") from exc
        return g.check(require_volume_one)

    @classmethod
    def loads(cls, text):
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        ls = ", ".join(format_fraction(q) for q in self.lengths)
        return f"MarkedGraph(rank={self.rank}, V={self.num_vertices}, edges={list(self.edges)}, lengths=[{ls}], marking={list(self.marking)})"


def spanning_tree(num_vertices, edges, basepoint=0, prefer=()):
    """Deterministic spanning tree containing the forest ``prefer`` when possible."""
    parent = list(range(num_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    chosen = []
    order = list(prefer) + [i for i in range(len(edges)) if i not in set(prefer)]
    for i in order:
        u, v = edges[i]
        a, b = find(u), find(v)
        if a != b:
            parent[a] = b
            chosen.append(i)
    if len(chosen) != num_vertices - 1:
        raise InvalidInput("graph is not connected")
    return tuple(sorted(chosen))


def _paths_in_tree(num_vertices, edges, tree, basepoint):
    adj = {v: [] for v in range(num_vertices)}
    for i in tree:
        u, v = edges[i]
        adj[u].append((edge_letter(i), v))
        adj[v].append((edge_letter(i, False), u))
    paths = {basepoint: ""}
    stack = [basepoint]
    while stack:
        u = stack.pop()
        for d, v in adj[u]:
            if v not in paths:
                paths[v] = paths[u] + d
                stack.append(v)
    return paths


def from_topology(rank, edges, lengths, basepoint=0, tree=None, check=True):
    """Graph with the marking induced by its spanning tree: the k-th non-tree edge is x_k."""
    edges = tuple((int(u), int(v)) for u, v in edges)
    nv = 1 + max(max(e) for e in edges)
    if tree is None:
        tree = spanning_tree(nv, edges, basepoint)
    tree = tuple(sorted(tree))
    paths = _paths_in_tree(nv, edges, tree, basepoint)
    if len(paths) != nv:
        raise InvalidInput("graph is not connected")
    nontree = [i for i in range(len(edges)) if i not in set(tree)]
    if len(nontree) != rank:
        raise InvalidInput(f"graph has Betti number {len(nontree)}, expected {rank}")
    marking = []
    inv = [""] * len(edges)
    for k, i in enumerate(nontree):
        u, v = edges[i]
        marking.append(reduce_word(paths[u] + edge_letter(i) + inverse(paths[v])))
        inv[i] = chr(ord("a") + k)
    g = MarkedGraph(rank, nv, edges, tuple(parse_fraction(q) for q in lengths),
                    tuple(marking), tuple(inv), basepoint, tree)
    return g.check() if check else g


def _remark_by_loops(g, loops):
    """Replace the marking of g by the given based edge loops (standard marking assumed)."""
    # words of the loops in the standard identification define an automorphism
    images = tuple(g.read_word(reduce_word(p)) for p in loops)
    phi = Automorphism.from_images(images)
    return act(g, phi, check=False)


def rose(rank, lengths=None, check=True):
    if lengths is None:
        lengths = [Fraction(1, rank)] * rank
    return from_topology(rank, [(0, 0)] * rank, lengths, check=check)


def theta(lengths=(Fraction(1, 3),) * 3):
    return from_topology(2, [(0, 1)] * 3, lengths)


def barbell(lengths=(Fraction(1, 3),) * 3):
    """Two loops joined by a separating arc: edges (loop at 0, arc 0->1, loop at 1)."""
    return from_topology(2, [(0, 0), (0, 1), (1, 1)], lengths)


def act(g, phi, check=True):
    """Right action T.phi: same metric graph, marking m o phi; lengths satisfy l_{T.phi}(a) = l_T(phi(a))."""
    if phi.rank != g.rank:
        raise InvalidInput(f"rank mismatch: graph of rank {g.rank}, automorphism of rank {phi.rank}")
    marking = tuple(apply_images(g.marking, w) for w in phi.images)
    inv = tuple(apply_images(phi.inverse_images, w) for w in g.inverse_marking)
    h = MarkedGraph(g.rank, g.num_vertices, g.edges, g.lengths, marking, inv, g.basepoint, g.tree)
    return h.check(require_volume_one=False) if check else h


def regauge(g, tree):
    """Same marked graph with inverse marking gauged trivial on a new spanning tree."""
    tree = tuple(sorted(tree))
    paths = _paths_in_tree(g.num_vertices, g.edges, tree, g.basepoint)
    gauge = {v: g.read_word(p) for v, p in paths.items()}
    inv = []
    for i, (u, v) in enumerate(g.edges):
        inv.append(reduce_word(gauge[u] + g.inverse_marking[i] + inverse(gauge[v])))
    return MarkedGraph(g.rank, g.num_vertices, g.edges, g.lengths, g.marking, tuple(inv), g.basepoint, tree)


def collapse(g, forest, check=True):
    """Contract a forest of edges (no cycles), keeping the marking."""
    forest = sorted(set(forest))
    if not forest:
        return g
    tree = spanning_tree(g.num_vertices, g.edges, g.basepoint, prefer=forest + list(g.tree))
    if not set(forest) <= set(tree):
        raise InvalidInput("collapsed edges contain a cycle")
    g = regauge(g, tree)
    parent = list(range(g.num_vertices))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i in forest:
        u, v = g.edges[i]
        a, b = find(u), find(v)
        parent[max(a, b)] = min(a, b)
    roots = sorted({find(v) for v in range(g.num_vertices)})
    vmap = {r: k for k, r in enumerate(roots)}
    keep = [i for i in range(g.num_edges) if i not in set(forest)]
    emap = {i: k for k, i in enumerate(keep)}
    edges = tuple((vmap[find(g.edges[i][0])], vmap[find(g.edges[i][1])]) for i in keep)
    table = {}
    for i in range(g.num_edges):
        if i in emap:
            table[edge_letter(i)] = edge_letter(emap[i])
            table[edge_letter(i, False)] = edge_letter(emap[i], False)
        else:
            table[edge_letter(i)] = ""
            table[edge_letter(i, False)] = ""
    trans = str.maketrans(table)
    marking = tuple(reduce_word(p.translate(trans)) for p in g.marking)
    h = MarkedGraph(
        g.rank, len(roots), edges,
        tuple(g.lengths[i] for i in keep),
        marking,
        tuple(g.inverse_marking[i] for i in keep),
        vmap[find(g.basepoint)],
        tuple(sorted(emap[i] for i in tree if i in emap)),
    )
    return h.check(require_volume_one=False) if check else h


def blow_up(g, vertex, moved, new_length=Fraction(0)):
    """Split ``vertex`` by moving the half-edges ``moved`` to a new vertex joined by a new edge.

    Half-edges are directed edges with tail at ``vertex``.  Both sides must
    keep at least two half-edges.  The result may have a zero-length edge and
    is returned unchecked for volume/positivity.
    """
    here = set(g.half_edges[vertex])
    moved = set(moved)
    if not moved <= here or len(moved) < 2 or len(here - moved) < 2:
        raise InvalidInput("blow-up needs at least two half-edges on each side")
    nv = g.num_vertices
    f = edge_letter(g.num_edges)
    F = f.upper()
    edges = []
    for i, (u, v) in enumerate(g.edges):
        if u == vertex and edge_letter(i) in moved:
            u = nv
        if v == vertex and edge_letter(i, False) in moved:
            v = nv
        edges.append((u, v))
    edges.append((vertex, nv))

    def lift(path):
        out = []
        if g.basepoint == vertex and path[0] in moved:
            out.append(f)
        for k, d in enumerate(path):
            if k > 0 and g.tail(d) == vertex:
                came = path[k - 1].swapcase() in moved
                going = d in moved
                if came and not going:
                    out.append(F)
                elif going and not came:
                    out.append(f)
            out.append(d)
        if g.basepoint == vertex and path[-1].swapcase() in moved:
            out.append(F)
        return reduce_word("".join(out))

    marking = tuple(lift(p) for p in g.marking)
    return MarkedGraph(
        g.rank, nv + 1, tuple(edges),
        tuple(g.lengths) + (Fraction(new_length),),
        marking,
        tuple(g.inverse_marking) + ("",),
        g.basepoint,
        tuple(sorted(g.tree + (g.num_edges,))),
    )


def blow_up_partitions(g, vertex):
    """All ways to split the half-edges at ``vertex`` into two sides of size >= 2."""
    hs = sorted(g.half_edges[vertex], key=lambda d: (edge_index(d), d.isupper()))
    k = len(hs)
    out = []
    if k < 4:
        return out
    first = hs[0]
    rest = hs[1:]
    # the side containing the first half-edge stays; enumerate the moved side
    for mask in range(1, 1 << len(rest)):
        moved = [rest[i] for i in range(len(rest)) if mask >> i & 1]
        if 2 <= len(moved) <= k - 2:
            out.append(tuple(moved))
    del first
    return out
