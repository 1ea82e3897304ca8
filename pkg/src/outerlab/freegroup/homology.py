"""Abelianization-based iwip heuristic."""
from __future__ import annotations

from dataclasses import dataclass

import sympy


@dataclass(frozen=True)
class IwipVerdict:
    passed: bool
    charpoly: str
    reason: str = ""
    spectral_radius: float = 0.0

    def __bool__(self):
        return self.passed


def charpoly(phi):
    x = sympy.Symbol("x")
    m = sympy.Matrix(phi.abelianization())
    return m.charpoly(x).as_expr(), x


def _is_cyclotomic_product(poly, x):
    """True when every root is a root of unity (poly monic with integer coefficients)."""
    for factor, _ in sympy.factor_list(poly, x)[1]:
        p = sympy.Poly(factor, x)
        # a monic integer irreducible polynomial with all roots of unity is cyclotomic
        if p.degree() == 0:
            continue
        if not any(p == sympy.Poly(sympy.cyclotomic_poly(k, x), x) for k in range(1, 4 * p.degree() * p.degree() + 3)):
            return False
    return True


def iwip_heuristic(phi):
    """Pass iff the abelianized characteristic polynomial is irreducible over Q,
    not cyclotomic, and has a root of modulus > 1.  Heuristic flag only."""
    poly, x = charpoly(phi)
    text = str(sympy.expand(poly))
    # root each square-free factor separately; repeated roots stall the numeric solver
    roots = []
    for factor, _ in sympy.factor_list(poly, x)[1]:
        p = sympy.Poly(factor, x)
        if p.degree() > 0:
            roots += p.nroots(n=30, maxsteps=200)
    rho = max(abs(complex(r)) for r in roots) if roots else 0.0
    if _is_cyclotomic_product(poly, x):
        return IwipVerdict(False, text, "cyclotomic: all eigenvalues are roots of unity", rho)
    factors = sympy.factor_list(poly, x)[1]
    if len(factors) != 1 or factors[0][1] != 1:
        return IwipVerdict(False, text, "reducible characteristic polynomial", rho)
    if rho <= 1.0 + 1e-12:
        return IwipVerdict(False, text, "no eigenvalue of modulus > 1", rho)
    return IwipVerdict(True, text, "", rho)
