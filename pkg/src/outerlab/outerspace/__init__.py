from fractions import Fraction

from ..errors import InvalidInput
from ..freegroup.automorphisms import Automorphism
from ..freegroup.whitehead import is_primitive
from ..freegroup.words import ConjClass
from .graph import (
    MarkedGraph,
    act,
    barbell,
    blow_up,
    blow_up_partitions,
    collapse,
    from_topology,
    rose,
    theta,
)
from .isometry import is_marked_isometric
from .lipschitz import Stretch, SymDistance, d_lipschitz, d_sym, lipschitz_stretch, sym_distance
from .loops import CandidateSet, candidates, embedded_circles, systole, systole_thick, translation_length


def rose_on_basis(basis, rank):
    """Equal-petal rose whose i-th petal reads basis[i]."""
    phi = Automorphism.from_images(tuple(basis))
    # petal i must read basis[i]: the marking sends x to the petal word of phi^-1(x)
    return act(rose(rank), phi.inverse())


def rose_adapted_to(alpha, rank=None):
    """Rose marked by a certified basis containing alpha, petals 1/n; alpha is a petal."""
    if isinstance(alpha, str):
        if rank is None:
            raise InvalidInput("rank is required for raw strings")
        alpha = ConjClass(alpha, rank)
    res = is_primitive(alpha)
    if not res.primitive:
        raise InvalidInput(f"{alpha} is not primitive")
    return rose_on_basis(res.basis, alpha.rank)


__all__ = [
    "CandidateSet",
    "MarkedGraph",
    "Stretch",
    "SymDistance",
    "act",
    "barbell",
    "blow_up",
    "blow_up_partitions",
    "candidates",
    "collapse",
    "d_lipschitz",
    "d_sym",
    "embedded_circles",
    "from_topology",
    "is_marked_isometric",
    "lipschitz_stretch",
    "rose",
    "rose_adapted_to",
    "rose_on_basis",
    "sym_distance",
    "systole",
    "systole_thick",
    "theta",
    "translation_length",
]
