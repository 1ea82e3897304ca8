"""Automorphisms of F_n given by basis images, with explicit inverses.

Composition follows function composition: ``compose(f, g)`` is ``f o g``,
i.e. ``x -> f(g(x))``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..errors import InvalidAutomorphism, InvalidInput
from .words import (
    ConjClass,
    Word,
    check_letters,
    cyclic_reduce,
    exponent_sum,
    inverse,
    reduce_word,
)


def apply_images(images, w):
    """Image of the word w under the endomorphism with the given basis images."""
    table = {}
    for i, img in enumerate(images):
        x = chr(ord("a") + i)
        table[x] = img
        table[x.upper()] = inverse(img)
    out = []
    for ch in w:
        piece = table[ch]
        # pieces are reduced, so cancellation only happens at the junction
        k, m = 0, len(piece)
        while k < m and out and out[-1] == piece[k].swapcase():
            out.pop()
            k += 1
        out.extend(piece[k:])
    return "".join(out)


@dataclass(frozen=True)
class Automorphism:
    images: tuple
    inverse_images: tuple
    rank: int = field(init=False)

    def __post_init__(self):
        images = tuple(reduce_word(w) for w in self.images)
        inv = tuple(reduce_word(w) for w in self.inverse_images)
        if len(images) != len(inv) or not images:
            raise InvalidAutomorphism("images and inverse images must list one word per basis letter")
        rank = len(images)
        for w in images + inv:
            check_letters(w, rank)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "inverse_images", inv)
        object.__setattr__(self, "rank", rank)
        letters = [chr(ord("a") + i) for i in range(rank)]
        for i, x in enumerate(letters):
            if apply_images(images, inv[i]) != x or apply_images(inv, images[i]) != x:
                raise InvalidAutomorphism(f"inverse data inconsistent on basis letter {x}")

    @classmethod
    def _from_trusted(cls, images, inverse_images):
        """Skip validation for data that is an automorphism by construction."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "images", images)
        object.__setattr__(obj, "inverse_images", inverse_images)
        object.__setattr__(obj, "rank", len(images))
        return obj

    @classmethod
    def identity(cls, rank):
        letters = tuple(chr(ord("a") + i) for i in range(rank))
        return cls(letters, letters)

    @classmethod
    def from_images(cls, images, inverse_images=None):
        """Build from basis images; the inverse is found by Nielsen reduction if not given."""
        images = tuple(reduce_word(w) for w in images)
        if inverse_images is None:
            inverse_images = invert_basis(images)
        return cls(images, tuple(inverse_images))

    @classmethod
    def parse(cls, spec):
        """Accept ``"ab,a"``, a list of images, or a dict with ``images``/``inverse``."""
        if isinstance(spec, str):
            spec = spec.strip()
            if spec.startswith("{") or spec.startswith("["):
                spec = json.loads(spec)
            else:
                spec = [s.strip() for s in spec.split(",")]
        if isinstance(spec, dict):
            return cls.from_images(spec["images"], spec.get("inverse"))
        return cls.from_images(list(spec))

    def to_dict(self):
        return {"images": list(self.images), "inverse": list(self.inverse_images)}

    def __str__(self):
        return "(" + ", ".join(f"{chr(ord('a') + i)}->{w or '1'}" for i, w in enumerate(self.images)) + ")"

    def __call__(self, w):
        if isinstance(w, ConjClass):
            self._check(w.rank)
            return ConjClass(apply_images(self.images, w.word), self.rank)
        if isinstance(w, Word):
            self._check(w.rank)
            return Word(apply_images(self.images, w.letters), self.rank)
        return apply_images(self.images, w)

    def _check(self, rank):
        if rank != self.rank:
            raise InvalidInput(f"rank mismatch: automorphism of F_{self.rank} applied to rank {rank}")

    def __matmul__(self, other):
        return compose(self, other)

    def inverse(self):
        return Automorphism._from_trusted(self.inverse_images, self.images)

    def __pow__(self, k):
        result = Automorphism.identity(self.rank)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = compose(result, base)
        return result

    def is_identity(self):
        return all(w == chr(ord("a") + i) for i, w in enumerate(self.images))

    def abelianization(self):
        """Integer matrix whose j-th column is the exponent vector of the j-th image."""
        cols = [exponent_sum(w, self.rank) for w in self.images]
        return tuple(tuple(cols[j][i] for j in range(self.rank)) for i in range(self.rank))

    def max_image_length(self):
        return max(len(w) for w in self.images)


def compose(f, g):
    if f.rank != g.rank:
        raise InvalidInput(f"rank mismatch: {f.rank} vs {g.rank}")
    images = tuple(apply_images(f.images, w) for w in g.images)
    inv = tuple(apply_images(g.inverse_images, w) for w in f.inverse_images)
    return Automorphism._from_trusted(images, inv)


def invert(f):
    return f.inverse()


def conjugation(g, rank):
    """Inner automorphism x -> g x g^-1."""
    g = reduce_word(g)
    gi = inverse(g)
    letters = [chr(ord("a") + i) for i in range(rank)]
    return Automorphism(
        tuple(reduce_word(g + x + gi) for x in letters),
        tuple(reduce_word(gi + x + g) for x in letters),
    )


def inner_conjugator(images, rank=None):
    """Return g with images[i] == g x_i g^-1 for every i, or None.

    The conjugator is pinned down by the first image up to a power of x_1; the
    power is searched in |k| <= max image length and every hit is verified.
    """
    images = [reduce_word(w) for w in images]
    rank = rank or len(images)
    u, core = cyclic_reduce(images[0])
    if core != "a":
        return None
    bound = max(len(w) for w in images) + 1
    letters = [chr(ord("a") + i) for i in range(rank)]
    for k in sorted(range(-bound, bound + 1), key=abs):
        g = reduce_word(u + ("a" * k if k >= 0 else "A" * -k))
        gi = inverse(g)
        if all(reduce_word(g + x + gi) == images[i] for i, x in enumerate(letters)):
            return g
    return None


def is_inner(f):
    """Decide whether f is conjugation by some g; returns g (a string) or None."""
    images = f.images if isinstance(f, Automorphism) else tuple(f)
    return inner_conjugator(images)


def nielsen_moves(rank):
    """Elementary Nielsen transformations acting on position i: (i, j, side, sign)."""
    for i in range(rank):
        for j in range(rank):
            if i != j:
                for side in ("right", "left"):
                    for sign in (1, -1):
                        yield i, j, side, sign


def _apply_move(basis, move):
    i, j, side, sign = move
    y = basis[j] if sign > 0 else inverse(basis[j])
    new = list(basis)
    new[i] = reduce_word(basis[i] + y) if side == "right" else reduce_word(y + basis[i])
    return tuple(new)


def invert_basis(images, max_states=200000):
    """Inverse images of the automorphism x_i -> images[i].

    Nielsen reduction tracked as words in fresh generators; length-preserving
    moves are explored breadth-first when no move shortens the tuple.
    Raises InvalidAutomorphism if the images do not form a basis.
    """
    rank = len(images)
    images = tuple(reduce_word(w) for w in images)
    check_letters("".join(images), rank)
    if any(not w for w in images):
        raise InvalidAutomorphism("an image is trivial")
    # track[i] is images[i]-coordinates word: basis[i] = apply(images, track[i])
    basis = images
    track = tuple(chr(ord("a") + i) for i in range(rank))
    total = sum(map(len, basis))
    seen = {basis}
    while total > rank:
        best = None
        for mv in nielsen_moves(rank):
            nb = _apply_move(basis, mv)
            t = sum(map(len, nb))
            if t < total and (best is None or t < best[0]):
                best = (t, mv, nb)
        if best is not None:
            total, mv, basis = best
            track = _apply_move(track, mv)
            seen.add(basis)
            continue
        # plateau: breadth-first over equal-length tuples until something shortens
        frontier = [(basis, track)]
        found = None
        while frontier and found is None:
            nxt = []
            for b, tr in frontier:
                for mv in nielsen_moves(rank):
                    nb = _apply_move(b, mv)
                    t = sum(map(len, nb))
                    if t < total:
                        found = (t, nb, _apply_move(tr, mv))
                        break
                    if t == total and nb not in seen:
                        seen.add(nb)
                        nxt.append((nb, _apply_move(tr, mv)))
                if found:
                    break
            if len(seen) > max_states:
                break
            frontier = nxt
        if found is None:
            raise InvalidAutomorphism(f"images {images} are not a basis of F_{rank}")
        total, basis, track = found
    if any(len(w) != 1 for w in basis) or len({w.lower() for w in basis}) != rank:
        raise InvalidAutomorphism(f"images {images} are not a basis of F_{rank}")
    # basis[i] = letter^{+-1} = phi(track[i]) so phi^{-1}(letter) = track[i]^{+-1}
    inv = [None] * rank
    for w, tr in zip(basis, track):
        k = ord(w.lower()) - ord("a")
        inv[k] = tr if w.islower() else inverse(tr)
    return tuple(inv)
