"""Stallings foldings for finitely generated subgroups of F_n."""
from __future__ import annotations

from .words import cyclic_reduce, reduce_word


class FoldedGraph:
    """Folded labelled graph of the subgroup generated by ``words``, based at 0.

    ``adj[v]`` maps a signed letter to the far endpoint, so an edge u -x-> v
    appears as adj[u]['x'] == v and adj[v]['X'] == u.
    """

    def __init__(self, words, rank):
        self.rank = rank
        edges = []
        count = 1
        for w in words:
            w = reduce_word(w)
            if not w:
                continue
            v = 0
            for k, ch in enumerate(w):
                if k == len(w) - 1:
                    u = 0
                else:
                    u = count
                    count += 1
                edges.append((v, ch, u) if ch.islower() else (u, ch.lower(), v))
                v = u
        parent = list(range(count))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        edge_set = set(edges)
        while True:
            merged = False
            seen = {}
            for u, x, v in edge_set:
                for key, target in (((find(u), x), v), ((find(v), x.upper()), u)):
                    other = seen.get(key)
                    if other is None:
                        seen[key] = target
                        continue
                    a, b = find(other), find(target)
                    if a != b:
                        # keep the basepoint as a representative
                        if b == 0:
                            a, b = b, a
                        parent[b] = a
                        merged = True
            edge_set = {(find(u), x, find(v)) for u, x, v in edge_set}
            if not merged:
                break
        labels = {find(0): 0}
        for u, _, v in sorted(edge_set):
            for w in (u, v):
                if w not in labels:
                    labels[w] = len(labels)
        self.adj = {i: {} for i in range(len(labels))}
        for u, x, v in edge_set:
            self.adj[labels[u]][x] = labels[v]
            self.adj[labels[v]][x.upper()] = labels[u]
        self._edges = len(edge_set)

    def num_edges(self):
        return self._edges

    def subgroup_rank(self):
        return self._edges - len(self.adj) + 1

    def is_whole_group(self):
        return len(self.adj) == 1 and len(self.adj[0]) == 2 * self.rank

    def read(self, w, start=0):
        v = start
        for ch in w:
            v = self.adj[v].get(ch)
            if v is None:
                return None
        return v

    def contains(self, w):
        """Membership of the element w in the subgroup."""
        return self.read(reduce_word(w)) == 0

    def core_vertices(self):
        alive = set(self.adj)
        degree = {v: len(self.adj[v]) for v in alive}
        stack = [v for v in alive if degree[v] <= 1]
        while stack:
            v = stack.pop()
            if v not in alive:
                continue
            alive.discard(v)
            for w in self.adj[v].values():
                if w in alive:
                    degree[w] -= 1
                    if degree[w] <= 1:
                        stack.append(w)
        return alive

    def contains_class(self, w):
        """Whether some conjugate of w lies in the subgroup."""
        _, c = cyclic_reduce(w)
        if not c:
            return True
        for v in sorted(self.core_vertices()):
            if self.read(c, v) == v:
                return True
        return False


def generates(words, rank):
    """True iff the words generate all of F_rank."""
    return FoldedGraph(words, rank).is_whole_group()


def is_basis(words, rank):
    return len(words) == rank and generates(words, rank)


def is_free_basis_of_subgroup(words, rank):
    """The words freely generate the subgroup they span."""
    words = [reduce_word(w) for w in words]
    if any(not w for w in words):
        return False
    return FoldedGraph(words, rank).subgroup_rank() == len(words)
