"""Exact rational linear algebra on small dense matrices.

Everything here works over `fractions.Fraction` and is fully deterministic:
row reduction always pivots on the first nonzero entry in row-major order,
so kernel and complement bases are reproducible across platforms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]
Matrix = list[list[Fraction]]


def vec(entries: Iterable) -> Vec:
    return tuple(Fraction(x) for x in entries)


def vec_add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c, a: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * x for x in a)


def dot(a: Vec, b: Vec) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))


def is_zero_vec(a: Vec) -> bool:
    return all(x == 0 for x in a)


def cross2(a: Sequence, b: Sequence) -> Fraction:
    """z-component of the cross product of two planar vectors."""
    return Fraction(a[0]) * Fraction(b[1]) - Fraction(a[1]) * Fraction(b[0])


def _copy(matrix: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in matrix]


def rref(matrix: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = _copy(matrix)
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def matrix_rank(matrix: Sequence[Sequence]) -> int:
    return len(rref(matrix)[1])


def kernel_basis(matrix: Sequence[Sequence]) -> list[Vec]:
    """Basis of {x : M x = 0}, one vector per free column, in column order.

    Each basis vector has entry 1 at its free column and 0 at the other
    free columns, which makes the basis canonical for a fixed input.
    """
    if not matrix:
        return []
    cols = len(matrix[0])
    red, pivots = rref(matrix)
    free = [c for c in range(cols) if c not in pivots]
    basis: list[Vec] = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(tuple(v))
    return basis


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> Vec | None:
    """One exact solution of M x = b (free variables set to 0); None if inconsistent."""
    if not matrix:
        return None
    cols = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs, strict=True)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return tuple(x)


def linear_feasible_nonneg(matrix: Sequence[Sequence], rhs: Sequence) -> bool:
    """Decide whether A x = b has a solution with x >= 0 (componentwise).

    Exact phase-1 simplex with Bland's rule, so it terminates and never
    sees rounding error.  Sizes here are tiny (tens of rows/columns).
    """
    a = _copy(matrix)
    b = [Fraction(x) for x in rhs]
    m = len(a)
    n = len(a[0]) if m else 0
    if m == 0:
        return True
    for i in range(m):
        if b[i] < 0:
            a[i] = [-x for x in a[i]]
            b[i] = -b[i]
    # tableau columns: n originals, m artificials, rhs
    tab = [a[i] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    # cost row for minimizing the artificial sum, with basic columns zeroed out
    cost = [Fraction(0)] * (n + m + 1)
    for j in range(n + m):
        cost[j] = Fraction(int(j >= n))
    for i in range(m):
        for j in range(n + m + 1):
            cost[j] -= tab[i][j]
    while True:
        enter = next((j for j in range(n + m) if cost[j] < 0), None)
        if enter is None:
            break
        best: tuple[Fraction, int, int] | None = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                key = (ratio, basis[i], i)
                if best is None or key < best:
                    best = key
        if best is None:
            # unbounded cannot happen in phase 1 (objective bounded below by 0)
            raise RuntimeError("phase-1 simplex reported an unbounded objective")
        _, _, leave = best
        pv = tab[leave][enter]
        tab[leave] = [x / pv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        f = cost[enter]
        if f != 0:
            cost = [x - f * y for x, y in zip(cost, tab[leave])]
        basis[leave] = enter
    return -cost[-1] == 0
