"""Whitehead automorphisms, length minimisation, primitivity and free-factor tests."""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache

from ..errors import InvalidInput
from .automorphisms import Automorphism, apply_images, compose
from .stallings import FoldedGraph, is_basis
from .words import ConjClass, alphabet, cyclic_reduce, exponent_sum, inverse, reduce_word


@lru_cache(maxsize=None)
def whitehead_automorphisms(rank):
    """All nontrivial type II Whitehead automorphisms, in a fixed order.

    A move is given by a multiplier letter m and a set Z of letters avoiding
    m and m^-1: each generator x becomes u x v with u = m^-1 when x^-1 is in Z
    and v = m when x is in Z.  Moves that only conjugate (Z = every other
    letter) are kept; they are harmless for cyclic words.
    """
    letters = alphabet(rank)
    moves = []
    for m in letters:
        others = [x for x in letters if x.lower() != m.lower()]
        for mask in range(1, 1 << len(others)):
            z = {others[i] for i in range(len(others)) if mask >> i & 1}
            mi = m.swapcase()
            images, inv = [], []
            for k in range(rank):
                x = chr(ord("a") + k)
                if x == m.lower():
                    images.append(x)
                    inv.append(x)
                    continue
                u = mi if x.upper() in z else ""
                v = m if x in z else ""
                images.append(reduce_word(u + x + v))
                inv.append(reduce_word(inverse(u) + x + inverse(v)))
            moves.append(Automorphism(tuple(images), tuple(inv)))
    return tuple(moves)


def whitehead_graph(words, rank):
    """Edge multiset of the Whitehead graph: {x, y^-1} for each cyclic subword xy."""
    edges = Counter()
    for w in words:
        n = len(w)
        for i in range(n):
            x, y = w[i], w[(i + 1) % n]
            e = tuple(sorted((x, y.swapcase())))
            edges[e] += 1
    return edges


def _components(vertices, edges, removed=None):
    nbrs = {v: set() for v in vertices if v != removed}
    for (x, y) in edges:
        if removed in (x, y):
            continue
        nbrs[x].add(y)
        nbrs[y].add(x)
    comps = []
    seen = set()
    for v in nbrs:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in nbrs[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def graph_shape(words, rank):
    """('disconnected' | 'cut-vertex' | 'biconnected', detail)."""
    verts = alphabet(rank)
    edges = whitehead_graph(words, rank)
    comps = _components(verts, edges)
    if len(comps) > 1:
        return "disconnected", comps
    for v in verts:
        if len(_components(verts, edges, removed=v)) > 1:
            return "cut-vertex", v
    return "biconnected", None


@dataclass(frozen=True)
class WhiteheadReport:
    minimized: tuple
    reducer: Automorphism
    total_length: int
    graph: dict

    def __post_init__(self):
        assert self.total_length == sum(len(c) for c in self.minimized)


def _images_of(phi, words):
    return tuple(cyclic_reduce(apply_images(phi.images, w))[1] for w in words)


def _as_classes(classes, rank=None):
    if not classes:
        raise InvalidInput("need at least one class")
    out = []
    for c in classes:
        if isinstance(c, ConjClass):
            if rank is not None and c.rank != rank:
                raise InvalidInput("classes must share a rank")
            rank = c.rank
            out.append(c)
        else:
            if rank is None:
                raise InvalidInput("rank is required for raw strings")
            out.append(ConjClass(c, rank))
    if any(c.rank != rank for c in out):
        raise InvalidInput("classes must share a rank")
    return tuple(out), rank


def whitehead_minimize(classes, rank=None):
    """Greedy steepest descent over Whitehead moves until no move shortens the tuple."""
    classes, rank = _as_classes(classes, rank)
    words = tuple(c.word for c in classes)
    reducer = Automorphism.identity(rank)
    total = sum(map(len, words))
    moves = whitehead_automorphisms(rank)
    while True:
        best = None
        for mv in moves:
            new = _images_of(mv, words)
            t = sum(map(len, new))
            if t < total and (best is None or t < best[0]):
                best = (t, mv, new)
        if best is None:
            break
        total, mv, words = best
        reducer = compose(mv, reducer)
    minimized = tuple(ConjClass(w, rank) for w in words)
    return WhiteheadReport(
        minimized=minimized,
        reducer=reducer,
        total_length=total,
        graph=dict(whitehead_graph([c.word for c in minimized], rank)),
    )


@dataclass(frozen=True)
class PrimitivityResult:
    primitive: bool
    basis: tuple | None = None
    report: WhiteheadReport | None = None

    def __bool__(self):
        return self.primitive


def is_primitive(alpha, rank=None):
    """Primitivity via Whitehead minimisation, with a verified basis certificate.

    The basis contains the canonical word of alpha itself.
    """
    (alpha,), rank = _as_classes([alpha], rank)
    if alpha.trivial:
        raise InvalidInput("the trivial class is not primitive or imprimitive")
    rep = whitehead_minimize([alpha])
    if rep.total_length != 1:
        return PrimitivityResult(False, None, rep)
    letter = rep.minimized[0].word
    inv = rep.reducer.inverse()
    basis = [reduce_word(apply_images(inv.images, chr(ord("a") + i))) for i in range(rank)]
    j = ord(letter.lower()) - ord("a")
    if letter.isupper():
        basis[j] = inverse(basis[j])
    # conjugate the whole basis so that position j is exactly alpha's word
    u, c = cyclic_reduce(basis[j])
    target = alpha.word
    h = None
    for i in range(len(c)):
        if c[i:] + c[:i] == target:
            s = c[:i]
            h = reduce_word(inverse(s) + inverse(u))
            break
    if h is None:
        raise AssertionError("reducer inverse does not carry a letter to alpha")
    hi = inverse(h)
    basis = tuple(reduce_word(h + b + hi) for b in basis)
    assert basis[j] == target
    if not is_basis(basis, rank):
        raise AssertionError(f"basis certificate {basis} failed Stallings validation")
    return PrimitivityResult(True, basis, rep)


@dataclass(frozen=True)
class FactorVerdict:
    """Outcome of the common proper free factor test.

    ``kind`` is 'contained', 'fills' or 'inconclusive'.  For 'contained',
    ``factor`` generates a proper free factor containing every input class and
    ``complement`` completes it to a basis of F_n.
    """

    kind: str
    factor: tuple = ()
    complement: tuple = ()
    reason: str = ""

    @property
    def contained(self):
        return self.kind == "contained"

    @property
    def fills(self):
        return self.kind == "fills"


def _absent_letter(words, rank):
    used = {ch.lower() for w in words for ch in w}
    for i in range(rank):
        x = chr(ord("a") + i)
        if x not in used:
            return x
    return None


def _factor_from(reducer, missing, rank):
    inv = reducer.inverse()
    gens, comp = [], []
    for i in range(rank):
        x = chr(ord("a") + i)
        w = reduce_word(apply_images(inv.images, x))
        (comp if x == missing else gens).append(w)
    return tuple(gens), tuple(comp)


def verify_factor(verdict, classes, rank):
    """Independent Stallings check of a 'contained' certificate."""
    words = [c.word if isinstance(c, ConjClass) else c for c in classes]
    if not verdict.contained:
        return False
    if not is_basis(verdict.factor + verdict.complement, rank):
        return False
    if len(verdict.factor) >= rank or not verdict.factor:
        return False
    g = FoldedGraph(verdict.factor, rank)
    return all(g.contains_class(w) for w in words)


def common_proper_factor(classes, rank=None, max_states=20000):
    """Decide whether all classes are conjugate into one proper free factor.

    After minimising, a letter missing from every word exhibits the factor.
    Otherwise a biconnected Whitehead graph certifies 'fills'.  Otherwise the
    finite set of minimal-length tuples is searched (length-preserving
    Whitehead moves) for a representative missing a letter.
    """
    classes, rank = _as_classes(classes, rank)
    if any(c.trivial for c in classes):
        raise InvalidInput("trivial class in common_proper_factor")
    rep = whitehead_minimize(classes, rank)
    words = tuple(c.word for c in rep.minimized)
    missing = _absent_letter(words, rank)
    if missing is not None:
        gens, comp = _factor_from(rep.reducer, missing, rank)
        return FactorVerdict("contained", gens, comp, "letter absent after minimisation")
    shape, _ = graph_shape(words, rank)
    if shape == "biconnected":
        return FactorVerdict("fills", reason="minimal Whitehead graph is connected without cut vertex")
    moves = whitehead_automorphisms(rank)
    total = rep.total_length
    start = tuple(sorted(words))
    seen = {start}
    queue = deque([(words, rep.reducer)])
    while queue:
        cur, red = queue.popleft()
        for mv in moves:
            new = _images_of(mv, cur)
            if sum(map(len, new)) != total:
                continue
            key = tuple(sorted(new))
            if key in seen:
                continue
            seen.add(key)
            nred = compose(mv, red)
            missing = _absent_letter(new, rank)
            if missing is not None:
                gens, comp = _factor_from(nred, missing, rank)
                return FactorVerdict("contained", gens, comp, "letter absent in a minimal form")
            if len(seen) > max_states:
                return FactorVerdict("inconclusive", reason=f"minimal-form search exceeded {max_states} states")
            queue.append((new, nred))
    return FactorVerdict("fills", reason=f"no minimal form among {len(seen)} misses a letter")


def abelian_gcd(alpha, rank):
    from math import gcd

    word = alpha.word if isinstance(alpha, ConjClass) else alpha
    g = 0
    for v in exponent_sum(word, rank):
        g = gcd(g, abs(v))
    return g
