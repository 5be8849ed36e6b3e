"""Linear subspaces of the n x n matrix space in canonical (RREF) form."""

from __future__ import annotations

from typing import Iterable

from ..errors import DimensionMismatch, NotInSpan
from .matrix import QMatrix, Rational, kernel, rref


class Subspace:
    """Span of matrices, stored as the RREF basis of their row-major flattenings.

    Because RREF is unique, two Subspaces are equal exactly when their basis
    tuples are equal.
    """

    __slots__ = ("ambient_dim", "basis", "_pivots")

    def __init__(self, ambient_dim: int, basis: tuple, pivots: tuple):
        # use Subspace.span; this constructor trusts its arguments
        self.ambient_dim = ambient_dim
        self.basis = basis
        self._pivots = pivots

    @classmethod
    def span(cls, mats: Iterable[QMatrix], ambient_dim: int | None = None) -> "Subspace":
        mats = list(mats)
        if ambient_dim is None:
            if not mats:
                raise ValueError("ambient_dim required for an empty spanning set")
            ambient_dim = mats[0].dim
        for m in mats:
            if m.dim != ambient_dim:
                raise DimensionMismatch(f"matrix of dim {m.dim} in a subspace of gl({ambient_dim})")
        red, pivots, rank = rref([m.flat() for m in mats])
        basis = tuple(QMatrix.from_flat(ambient_dim, row) for row in red[:rank])
        return cls(ambient_dim, basis, tuple(pivots))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        n = ambient_dim
        return cls.span((QMatrix.from_flat(n, [int(i == k) for i in range(n * n)]) for k in range(n * n)), n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def residual(self, x: QMatrix) -> tuple:
        """Flattened ``x`` minus its projection along the pivot coordinates."""
        if x.dim != self.ambient_dim:
            raise DimensionMismatch(f"matrix of dim {x.dim} tested against a subspace of gl({self.ambient_dim})")
        v = list(x.flat())
        for b, p in zip(self.basis, self._pivots):
            c = v[p]
            if c:
                v = [a - c * bb for a, bb in zip(v, b.flat())]
        return tuple(v)

    def contains(self, x: QMatrix) -> bool:
        return not any(self.residual(x))

    __contains__ = contains

    def extended(self, x: QMatrix) -> "Subspace":
        """``self + span{x}``, by reducing one new row into the canonical basis."""
        v = self.residual(x)
        pivot = next((i for i, a in enumerate(v) if a), None)
        if pivot is None:
            return self
        inv = 1 / v[pivot]
        v = [a * inv for a in v]
        rows = []
        for b in self.basis:
            f = b.flat()
            c = f[pivot]
            rows.append([a - c * w for a, w in zip(f, v)] if c else f)
        at = sum(1 for p in self._pivots if p < pivot)
        rows.insert(at, v)
        pivots = self._pivots[:at] + (pivot,) + self._pivots[at:]
        n = self.ambient_dim
        return Subspace(n, tuple(QMatrix.from_flat(n, r) for r in rows), pivots)

    def coordinates(self, x: QMatrix) -> tuple[Rational, ...]:
        """Coefficients of ``x`` against the canonical basis."""
        if not self.contains(x):
            raise NotInSpan("matrix is not in the subspace")
        flat = x.flat()
        return tuple(flat[p] for p in self._pivots)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._same_ambient(other)
        return all(self.contains(b) for b in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._same_ambient(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient_dim)
        # a_i - b_j relations: columns are self basis then other basis
        flats = [b.flat() for b in self.basis] + [b.flat() for b in other.basis]
        system = [[f[i] for f in flats] for i in range(self.ambient_dim ** 2)]
        k = self.dim
        vecs = []
        for rel in kernel(system):
            acc = QMatrix.zero(self.ambient_dim)
            for c, b in zip(rel[:k], self.basis):
                if c:
                    acc = acc + b * c
            vecs.append(acc)
        return Subspace.span(vecs, self.ambient_dim)

    def _same_ambient(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"gl({self.ambient_dim}) vs gl({other.ambient_dim})")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(gl({self.ambient_dim}), dim={self.dim})"


def span_contains(s: Subspace, x: QMatrix) -> bool:
    return s.contains(x)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    a._same_ambient(b)
    return a == b
