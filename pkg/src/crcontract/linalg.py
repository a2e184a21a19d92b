"""Exact affine solver over Q.

Rows are cleared of denominators and reduced with integer (fraction-free)
row operations; each row is divided by the gcd of its entries after every
update to keep coefficients small.  Pivots are chosen as the first nonzero
entry in column order, so kernel bases are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class AffineSolution:
    consistent: bool
    particular: Optional[Tuple[Fraction, ...]]
    kernel: Tuple[Tuple[Fraction, ...], ...]
    pivots: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _integer_row(row: Sequence[Fraction]) -> List[int]:
    den = reduce(lcm, (Fraction(x).denominator for x in row), 1)
    ints = [int(Fraction(x) * den) for x in row]
    return _primitive(ints)


def _primitive(row: List[int]) -> List[int]:
    g = reduce(gcd, row, 0)
    if g > 1:
        row = [x // g for x in row]
    return row


def rref_integer(rows: Sequence[Sequence[Fraction]], ncols: int) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free reduced row echelon form; returns (rows, pivot columns)."""
    mat = [_integer_row(r) for r in rows if any(r)]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pr = next((j for j in range(r, len(mat)) if mat[j][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        if mat[r][c] < 0:
            mat[r] = [-x for x in mat[r]]
        p = mat[r][c]
        for j in range(len(mat)):
            if j != r and mat[j][c]:
                a = mat[j][c]
                mat[j] = _primitive([p * x - a * y for x, y in zip(mat[j], mat[r])])
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r] + [row for row in mat[r:] if any(row)], pivots


def solve_affine(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction], nunknowns: int) -> AffineSolution:
    """Solve A x = b exactly; report a particular solution and a kernel basis."""
    if len(A) != len(b):
        raise ValueError("row count mismatch between A and b")
    aug = [list(row) + [Fraction(rhs)] for row, rhs in zip(A, b)]
    mat, pivots = rref_integer(aug, nunknowns + 1)
    if nunknowns in pivots:
        return AffineSolution(False, None, (), tuple(p for p in pivots if p != nunknowns))
    pivot_row = {c: i for i, c in enumerate(pivots)}
    free = [c for c in range(nunknowns) if c not in pivot_row]

    part = [Fraction(0)] * nunknowns
    for c, i in pivot_row.items():
        part[c] = Fraction(mat[i][nunknowns], mat[i][c])

    kernel = []
    for fc in free:
        v = [Fraction(0)] * nunknowns
        v[fc] = Fraction(1)
        for c, i in pivot_row.items():
            if mat[i][fc]:
                v[c] = Fraction(-mat[i][fc], mat[i][c])
        kernel.append(tuple(v))
    return AffineSolution(True, tuple(part), tuple(kernel), tuple(pivots))


def nullspace(A: Sequence[Sequence[Fraction]], ncols: int) -> List[Tuple[Fraction, ...]]:
    sol = solve_affine(A, [Fraction(0)] * len(A), ncols)
    return list(sol.kernel)


def apply(A: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> List[Fraction]:
    return [sum((a * v for a, v in zip(row, x)), Fraction(0)) for row in A]
