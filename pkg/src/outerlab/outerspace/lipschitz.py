"""One-sided and symmetrised Lipschitz metrics, stored multiplicatively."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import InvalidInput
from ..freegroup.words import ConjClass
from .loops import candidates


@dataclass(frozen=True)
class Stretch:
    """Multiplicative Lipschitz stretch exp(d_L) with a class attaining it."""

    value: Fraction
    witness: ConjClass

    @property
    def log(self):
        return math.log(self.value)


def _same_rank(S, T):
    if S.rank != T.rank:
        raise InvalidInput(f"rank mismatch: {S.rank} vs {T.rank}")


def lipschitz_stretch(S, T):
    """max over candidates of S of l_T / l_S; ties go to the earlier candidate."""
    _same_rank(S, T)
    best = None
    for cand in candidates(S):
        ls = S.path_length(cand.loop)
        ratio = T.length_of(cand.cls) / ls
        if best is None or ratio > best[0]:
            best = (ratio, cand.cls)
    return Stretch(best[0], best[1])


def d_lipschitz(S, T):
    return lipschitz_stretch(S, T).log


@dataclass(frozen=True)
class SymDistance:
    forward: Stretch
    backward: Stretch

    @property
    def product(self):
        return self.forward.value * self.backward.value

    @property
    def value(self):
        return math.log(self.product)

    def is_zero(self):
        return self.product == 1


def sym_distance(S, T):
    """d(S, T) = d_L(S, T) + d_L(T, S), with both exact stretches kept."""
    return SymDistance(lipschitz_stretch(S, T), lipschitz_stretch(T, S))


def d_sym(S, T):
    return sym_distance(S, T).value
