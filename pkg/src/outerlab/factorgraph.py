"""The free factor graph side: basic classes, the shadow map, and small distances."""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ChainBroken, InvalidInput, NoPrimitiveBasicClass
from .freegroup.stallings import is_free_basis_of_subgroup
from .freegroup.whitehead import FactorVerdict, common_proper_factor, is_primitive, verify_factor
from .freegroup.words import ConjClass, inverse, reduce_word
from .minima.line import balancing_projection
from .outerspace import rose_on_basis
from .outerspace.loops import tight_loops_up_to

log = logging.getLogger(__name__)

BASIC_BOUND = 2
PATH_FLAG = 10 ** 4


@dataclass(frozen=True)
class FFVertex:
    """A conjugacy class of proper free factors, given by a basis of one representative."""

    generators: tuple
    rank: int

    def __post_init__(self):
        gens = tuple(reduce_word(g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not 1 <= len(gens) < self.rank:
            raise InvalidInput(f"a proper free factor of F_{self.rank} has rank 1..{self.rank - 1}")
        if not is_free_basis_of_subgroup(gens, self.rank):
            raise InvalidInput(f"{gens} is not a basis of the subgroup it generates")

    @property
    def factor_rank(self):
        return len(self.generators)


@dataclass(frozen=True)
class ShadowPoint:
    source: object  # a grid value or an orbit word
    vertex: FFVertex
    cls: ConjClass
    trace: tuple  # (class, primitive?) for every basic class examined up to the winner


@dataclass(frozen=True)
class BasicEnumeration:
    classes: tuple  # sorted by (length, canonical form)
    lengths: tuple
    explored: int

    @property
    def flagged(self):
        return self.explored > PATH_FLAG


def basic_enumeration(T, bound=BASIC_BOUND, max_paths=10 ** 6):
    items, explored = tight_loops_up_to(T, bound, max_paths=max_paths)
    if explored > PATH_FLAG:
        log.warning("basic class enumeration explored %d paths (> %d)", explored, PATH_FLAG)
    return BasicEnumeration(tuple(c for _, c in items), tuple(q for q, _ in items), explored)


def basic_classes(T):
    """Classes of all tight loops of metric length at most 2, by (length, canonical form)."""
    return list(basic_enumeration(T).classes)


def upsilon(T, source=None):
    """Rank-one factor of the first primitive basic class."""
    trace = []
    for c in basic_enumeration(T).classes:
        prim = bool(is_primitive(c))
        trace.append((c, prim))
        if prim:
            return ShadowPoint(source, FFVertex((c.word,), T.rank), c, tuple(trace))
    raise NoPrimitiveBasicClass(f"no primitive class of length <= {BASIC_BOUND} on {T!r}")


@dataclass(frozen=True)
class FFVerdict:
    kind: str  # 'leq2' | 'geq3' | 'inconclusive'
    middle: FFVertex | None
    factor: FactorVerdict

    @property
    def leq2(self):
        return self.kind == "leq2"

    @property
    def geq3(self):
        return self.kind == "geq3"


def _primitive_class(alpha, rank):
    if isinstance(alpha, str):
        if rank is None:
            raise InvalidInput("rank is required for raw strings")
        alpha = ConjClass(alpha, rank)
    if alpha.trivial or not is_primitive(alpha):
        raise InvalidInput(f"{alpha} is not primitive")
    return alpha


def ff_leq2(alpha, beta, rank=None):
    """Distance between the rank-one factors of alpha and beta: <= 2 or >= 3."""
    alpha = _primitive_class(alpha, rank)
    beta = _primitive_class(beta, alpha.rank)
    if alpha.rank != beta.rank:
        raise InvalidInput("rank mismatch")
    # <alpha> and <alpha^-1> are the same vertex
    if alpha == beta or alpha == beta.inverse():
        raise InvalidInput("the two classes give the same vertex")
    v = common_proper_factor([alpha, beta])
    if v.contained:
        return FFVerdict("leq2", FFVertex(v.factor, alpha.rank), v)
    if v.fills:
        return FFVerdict("geq3", None, v)
    return FFVerdict("inconclusive", None, v)


def recheck_leq2(verdict, alpha, beta):
    """Stallings re-check of a '<= 2' certificate."""
    return verdict.leq2 and verify_factor(verdict.factor, [alpha, beta], alpha.rank)


def ff_upper_bound(chain, rank=None):
    """2 * (len(chain) - 1), after checking each hop is within distance 2."""
    chain = [_primitive_class(c, rank) for c in chain]
    if not chain:
        raise InvalidInput("empty chain")
    for i in range(len(chain) - 1):
        a, b = chain[i], chain[i + 1]
        if a == b or a == b.inverse():
            continue
        if not ff_leq2(a, b).leq2:
            raise ChainBroken(i, str(a), str(b))
    return 2 * (len(chain) - 1)


def psi_retraction(line, alpha, basis=None):
    """Balancing projection of a rose on which alpha is a petal."""
    alpha = _primitive_class(alpha, line.mu.rank)
    if basis is None:
        basis = is_primitive(alpha).basis
    if alpha.word not in basis:
        raise InvalidInput("the basis must contain alpha's canonical word")
    T = rose_on_basis(basis, alpha.rank)
    return balancing_projection(line, T)


def adapted_bases(alpha, rng, count, steps=3, rank=None):
    """Random bases containing alpha's word, obtained by Nielsen moves on the other elements."""
    alpha = _primitive_class(alpha, rank)
    base = list(is_primitive(alpha).basis)
    j = base.index(alpha.word)
    n = alpha.rank
    out = [tuple(base)]
    while len(out) < count:
        b = list(base)
        for _ in range(rng.randint(1, steps)):
            i = rng.choice([k for k in range(n) if k != j])
            k = rng.choice([k for k in range(n) if k != i])
            w = b[k] if rng.random() < 0.5 else inverse(b[k])
            b[i] = reduce_word(b[i] + w) if rng.random() < 0.5 else reduce_word(w + b[i])
        out.append(tuple(b))
    return out


@dataclass
class SpreadReport:
    alpha: ConjClass
    indices: list = field(default_factory=list)
    R_emp: float = 0.0


def projection_spread(line, alpha, count=50, seed=0):
    """Largest distance between projections of different roses adapted to alpha."""
    rng = random.Random(seed)
    rep = SpreadReport(_primitive_class(alpha, line.mu.rank))
    for basis in adapted_bases(rep.alpha, rng, count):
        rep.indices.append(psi_retraction(line, rep.alpha, basis).index)
    ks = sorted(set(rep.indices))
    rep.R_emp = max((line.distance(i, j) for i in ks for j in ks), default=0.0)
    return rep


@dataclass(frozen=True)
class ShadowRow:
    t: Fraction
    point: ShadowPoint
    to_previous: str  # ff_leq2 verdict with the previous row, 'same' or ''


def shadow_along(line):
    rows, prev = [], None
    for t, g in zip(line.grid, line.points):
        p = upsilon(g, t)
        if prev is None:
            rel = ""
        elif p.cls == prev.cls or p.cls == prev.cls.inverse():
            rel = "same"
        else:
            rel = ff_leq2(prev.cls, p.cls).kind
        rows.append(ShadowRow(t, p, rel))
        prev = p
    return rows
