"""Exact two-phase simplex method over the rationals with Bland's rule."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)


@dataclass
class LPResult:
    status: str  # 'optimal' | 'infeasible' | 'unbounded'
    x: list | None = None
    value: Fraction | None = None
    basis: list | None = None


class _Tableau:
    def __init__(self, A, b, basis):
        self.A = [list(row) for row in A]
        self.b = list(b)
        self.basis = list(basis)

    def pivot(self, r, j):
        A, b = self.A, self.b
        p = A[r][j]
        row = [v / p for v in A[r]]
        A[r] = row
        b[r] = b[r] / p
        for i in range(len(A)):
            if i != r:
                f = A[i][j]
                if f:
                    Ai = A[i]
                    A[i] = [x - f * y for x, y in zip(Ai, row)]
                    b[i] -= f * b[r]
        self.basis[r] = j

    def reduced_costs(self, c):
        cb = [c[j] for j in self.basis]
        n = len(c)
        red = list(c)
        for i, row in enumerate(self.A):
            if cb[i]:
                for j in range(n):
                    if row[j]:
                        red[j] -= cb[i] * row[j]
        return red

    def run(self, c, allowed):
        """Bland's rule: lowest-index improving column, lowest-basis-index ratio tie."""
        while True:
            red = self.reduced_costs(c)
            enter = next((j for j in allowed if red[j] < 0), None)
            if enter is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.A):
                if row[enter] > 0:
                    ratio = self.b[i] / row[enter]
                    if best is None or ratio < best[0] or (ratio == best[0] and self.basis[i] < self.basis[best[1]]):
                        best = (ratio, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], enter)


def solve_standard(c, A, b):
    """min c.x subject to A x = b, x >= 0 (all exact)."""
    m, n = len(A), len(c)
    c = [Fraction(v) for v in c]
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]
    # phase 1 with artificials n..n+m-1
    A1 = [row + [Fraction(int(i == k)) for k in range(m)] for i, row in enumerate(A)]
    tab = _Tableau(A1, b, range(n, n + m))
    c1 = [ZERO] * n + [Fraction(1)] * m
    tab.run(c1, range(n + m))
    if sum((tab.b[i] for i in range(m) if tab.basis[i] >= n), ZERO) > 0:
        return LPResult("infeasible")
    # drive remaining artificials out of the basis
    for i in range(m):
        if tab.basis[i] >= n:
            j = next((j for j in range(n) if tab.A[i][j] != 0), None)
            if j is not None:
                tab.pivot(i, j)
    keep = [i for i in range(m) if tab.basis[i] < n]
    tab = _Tableau([tab.A[i][:n] for i in keep], [tab.b[i] for i in keep], [tab.basis[i] for i in keep])
    status = tab.run(c, range(n))
    if status != "optimal":
        return LPResult(status)
    x = [ZERO] * n
    for i, j in enumerate(tab.basis):
        x[j] = tab.b[i]
    value = sum((ci * xi for ci, xi in zip(c, x)), ZERO)
    return LPResult("optimal", x, value, list(tab.basis))


def solve(c, A_eq=(), b_eq=(), A_ge=(), b_ge=()):
    """min c.x subject to A_eq x = b_eq, A_ge x >= b_ge, x >= 0; surplus variables are hidden."""
    n = len(c)
    k = len(A_ge)
    rows, rhs = [], []
    for row, val in zip(A_eq, b_eq):
        rows.append(list(row) + [0] * k)
        rhs.append(val)
    for s, (row, val) in enumerate(zip(A_ge, b_ge)):
        rows.append(list(row) + [-1 if t == s else 0 for t in range(k)])
        rhs.append(val)
    res = solve_standard(list(c) + [0] * k, rows, rhs)
    if res.status == "optimal":
        res.x = res.x[:n]
    return res
