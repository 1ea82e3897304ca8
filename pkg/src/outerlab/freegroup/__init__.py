from .automorphisms import Automorphism, apply_images, compose, conjugation, invert, is_inner
from .homology import IwipVerdict, iwip_heuristic
from .stallings import FoldedGraph, generates, is_basis
from .whitehead import (
    FactorVerdict,
    PrimitivityResult,
    WhiteheadReport,
    abelian_gcd,
    common_proper_factor,
    is_primitive,
    verify_factor,
    whitehead_automorphisms,
    whitehead_graph,
    whitehead_minimize,
)
from .words import ConjClass, Word, canonicalize, classes_up_to, cyclic_reduce, inverse, reduce_word

__all__ = [
    "Automorphism",
    "ConjClass",
    "FactorVerdict",
    "FoldedGraph",
    "IwipVerdict",
    "PrimitivityResult",
    "WhiteheadReport",
    "Word",
    "abelian_gcd",
    "apply_images",
    "canonicalize",
    "classes_up_to",
    "common_proper_factor",
    "compose",
    "conjugation",
    "cyclic_reduce",
    "generates",
    "inverse",
    "invert",
    "is_basis",
    "is_inner",
    "is_primitive",
    "iwip_heuristic",
    "reduce_word",
    "verify_factor",
    "whitehead_automorphisms",
    "whitehead_graph",
    "whitehead_minimize",
]
