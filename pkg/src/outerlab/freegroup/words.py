"""Reduced words and conjugacy classes in F_n.

Words are ASCII strings: ``a, b, c, ...`` are the basis letters x_1, x_2, ...
and the capital letter is the inverse.  Most of the package works on raw
strings for speed; :class:`Word` and :class:`ConjClass` are the validated
value types used at API boundaries.
"""
from __future__ import annotations

import string
from dataclasses import dataclass
from functools import total_ordering

from ..errors import InvalidInput

MAX_RANK = 26


def alphabet(rank):
    """Letters of F_rank in the fixed order a, A, b, B, ..."""
    out = []
    for ch in string.ascii_lowercase[:rank]:
        out.append(ch)
        out.append(ch.upper())
    return out


def check_letters(w, rank):
    if not 1 <= rank <= MAX_RANK:
        raise InvalidInput(f"rank must be in 1..{MAX_RANK}, got {rank}")
    allowed = set(string.ascii_lowercase[:rank]) | set(string.ascii_uppercase[:rank])
    bad = set(w) - allowed
    if bad:
        raise InvalidInput(f"letters {sorted(bad)} outside the alphabet of F_{rank}")


def inverse(w):
    return w[::-1].swapcase()


def reduce_word(w):
    out = []
    for ch in w:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def multiply(*words):
    return reduce_word("".join(words))


def cyclic_reduce(w):
    """Cyclically reduce a word; returns (conjugator u, core c) with w = u c u^-1."""
    w = reduce_word(w)
    i, j = 0, len(w) - 1
    while i < j and w[i] == w[j].swapcase():
        i += 1
        j -= 1
    return w[:i], w[i:j + 1]


# a < A < b < B < ... as plain string comparison after translation
_ORDER = {}
for _i, _ch in enumerate(string.ascii_lowercase):
    _ORDER[_ch] = chr(0x21 + 2 * _i)
    _ORDER[_ch.upper()] = chr(0x22 + 2 * _i)
_ORDER_TABLE = str.maketrans(_ORDER)


def order_key(w):
    return w.translate(_ORDER_TABLE)


def least_rotation(w):
    if not w:
        return w
    n = len(w)
    doubled = order_key(w) * 2
    best = 0
    for i in range(1, n):
        if doubled[i : i + n] < doubled[best : best + n]:
            best = i
    return w[best:] + w[:best]


def canonical(w):
    """Canonical representative of the conjugacy class of w (cyclically reduced, least rotation)."""
    return least_rotation(cyclic_reduce(w)[1])


def exponent_sum(w, rank):
    vec = [0] * rank
    for ch in w:
        i = ord(ch.lower()) - ord("a")
        vec[i] += 1 if ch.islower() else -1
    return tuple(vec)


def power_root(w):
    """For a cyclically reduced w, return (r, k) with w = r^k and k maximal."""
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d], n // d
    return w, 1


@total_ordering
@dataclass(frozen=True)
class Word:
    letters: str
    rank: int

    def __post_init__(self):
        check_letters(self.letters, self.rank)
        if reduce_word(self.letters) != self.letters:
            object.__setattr__(self, "letters", reduce_word(self.letters))

    def __str__(self):
        return self.letters

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other):
        if self.rank != other.rank:
            raise InvalidInput("rank mismatch")
        return Word(self.letters + other.letters, self.rank)

    def __lt__(self, other):
        return (len(self), order_key(self.letters)) < (len(other), order_key(other.letters))

    def inverse(self):
        return Word(inverse(self.letters), self.rank)


@total_ordering
@dataclass(frozen=True)
class ConjClass:
    """A conjugacy class of F_n, stored by its canonical cyclic word.

    A class and its inverse are distinct values.
    """

    word: str
    rank: int

    def __post_init__(self):
        check_letters(self.word, self.rank)
        c = canonical(self.word)
        if c != self.word:
            object.__setattr__(self, "word", c)

    @classmethod
    def of(cls, w, rank):
        if isinstance(w, ConjClass):
            if w.rank != rank:
                raise InvalidInput(f"class {w} has rank {w.rank}, expected {rank}")
            return w
        if isinstance(w, Word):
            w = w.letters
        return cls(w, rank)

    def __str__(self):
        return self.word

    def __len__(self):
        return len(self.word)

    def __lt__(self, other):
        return (len(self.word), order_key(self.word)) < (len(other.word), order_key(other.word))

    @property
    def trivial(self):
        return not self.word

    def inverse(self):
        return ConjClass(inverse(self.word), self.rank)


def canonicalize(w, rank=None):
    """Conjugacy class of a word (a :class:`Word` or a string plus rank)."""
    if isinstance(w, Word):
        return ConjClass(w.letters, w.rank)
    if rank is None:
        raise InvalidInput("rank is required for raw strings")
    return ConjClass(w, rank)


def cyclic_words(rank, length):
    """All cyclically reduced words of the given length (not deduplicated by rotation)."""
    letters = alphabet(rank)
    if length == 0:
        return
    stack = [(ch,) for ch in letters]
    while stack:
        w = stack.pop()
        if len(w) == length:
            if length == 1 or w[-1] != w[0].swapcase():
                yield "".join(w)
            continue
        last = w[-1].swapcase()
        for ch in letters:
            if ch != last:
                stack.append(w + (ch,))


def classes_up_to(rank, max_length):
    """All nontrivial conjugacy classes with cyclic length <= max_length, sorted."""
    seen = set()
    for k in range(1, max_length + 1):
        for w in cyclic_words(rank, k):
            seen.add(least_rotation(w))
    return sorted((ConjClass(w, rank) for w in seen))
