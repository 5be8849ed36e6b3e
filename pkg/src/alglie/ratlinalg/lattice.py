"""Integer lattices in Hermite normal form and integer relation kernels."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Sequence

from .matrix import Q


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, s, t)`` with ``s*a + t*b == g >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _integer_echelon(rows: list[list[int]], ncols: int) -> int:
    """Unimodular row reduction of ``rows`` in place on the first ``ncols`` columns.

    Afterwards rows ``[0, rank)`` are in echelon form with positive pivots
    and reduced entries above each pivot; rows ``[rank, ...)`` vanish on
    the first ``ncols`` columns. Returns the rank.
    """
    r = 0
    pivots = []
    for c in range(ncols):
        if r == len(rows):
            break
        for i in range(r + 1, len(rows)):
            b = rows[i][c]
            if not b:
                continue
            a = rows[r][c]
            g, s, t = _xgcd(a, b)
            u, v = a // g, b // g
            top, bot = rows[r], rows[i]
            # [[s, t], [-v, u]] has determinant 1
            rows[r] = [s * x + t * y for x, y in zip(top, bot)]
            rows[i] = [-v * x + u * y for x, y in zip(top, bot)]
        if rows[r][c]:
            if rows[r][c] < 0:
                rows[r] = [-x for x in rows[r]]
            pivots.append((r, c))
            r += 1
    for pr, pc in pivots:
        p = rows[pr][pc]
        for i in range(pr):
            q = rows[i][pc] // p
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[pr])]
    return r


def hermite_normal_form(vectors: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row-style HNF basis of the lattice generated by ``vectors``.

    Pivots are positive and entries above a pivot lie in ``[0, pivot)``.
    """
    rows = [[int(x) for x in v] for v in vectors]
    if not rows:
        return []
    rank = _integer_echelon(rows, len(rows[0]))
    return [tuple(r) for r in rows[:rank]]


@dataclass(frozen=True)
class IntegerLattice:
    """Sublattice of ``Z^ambient`` with an HNF basis (canonical, so ``==`` is lattice equality)."""

    ambient: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_generators(cls, ambient: int, vectors) -> "IntegerLattice":
        return cls(ambient, tuple(hermite_normal_form(vectors)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, p: Sequence[int]) -> bool:
        rows = [list(b) for b in self.basis]
        v = [int(x) for x in p]
        for b in rows:
            pc = next(i for i, x in enumerate(b) if x)
            q, rem = divmod(v[pc], b[pc])
            if rem:
                return False
            v = [x - q * y for x, y in zip(v, b)]
        return not any(v)


def integer_kernel(rows: Sequence[Sequence], d: int | None = None) -> IntegerLattice:
    """The lattice ``{p in Z^d : row . p == 0 for every row}``.

    Rows are rational; each is scaled to integers first. Elimination on the
    transposed system carries an identity block, and the identity parts of
    the rows that end up zero form a basis of the kernel lattice.
    """
    rows = [[Q(x) for x in r] for r in rows]
    if d is None:
        if not rows:
            raise ValueError("d required when no rows are given")
        d = len(rows[0])
    int_rows = []
    for r in rows:
        den = lcm(1, *(x.denominator for x in r))
        int_rows.append([int(x * den) for x in r])
    k = len(int_rows)
    work = [[int_rows[i][j] for i in range(k)] + [int(j == jj) for jj in range(d)] for j in range(d)]
    rank = _integer_echelon(work, k)
    generators = [row[k:] for row in work[rank:]]
    return IntegerLattice.from_generators(d, generators)
