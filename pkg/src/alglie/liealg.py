"""Matrix Lie subalgebras: bracket closure, structure constants, series and Engel's test."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotClosed, NotNilpotent
from .jordan import is_nilpotent_matrix
from .ratlinalg import Q, QMatrix, Rational, Subspace, bracket, kernel, rref, CoordinateSolver

Tensor = tuple  # c[i][j][k] = coefficient of basis_k in [basis_i, basis_j]


class LieSubalgebra:
    """A bracket-closed subspace of gl(n) with a presentation basis.

    ``user_basis`` keeps the caller's ordering (e.g. X1, X2, X3) and is the
    basis structure constants are expressed in. It defaults to the
    canonical RREF basis of ``space``.
    """

    def __init__(self, space: Subspace, user_basis: Sequence[QMatrix] | None = None, *, check: bool = True):
        if user_basis is None:
            user_basis = space.basis
        user_basis = tuple(user_basis)
        if len(user_basis) != space.dim or Subspace.span(user_basis, space.ambient_dim) != space:
            raise ValueError("user_basis must be a basis of space")
        if check and not is_subalgebra(space):
            raise NotClosed("subspace is not closed under the bracket")
        self.space = space
        self.user_basis = user_basis

    @classmethod
    def from_basis(cls, mats: Iterable[QMatrix], ambient_dim: int | None = None) -> "LieSubalgebra":
        mats = list(mats)
        space = Subspace.span(mats, ambient_dim)
        if len(mats) != space.dim:
            raise ValueError("basis matrices are linearly dependent")
        return cls(space, mats)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def ambient_dim(self) -> int:
        return self.space.ambient_dim

    def __contains__(self, x: QMatrix) -> bool:
        return self.space.contains(x)

    @cached_property
    def _solver(self) -> CoordinateSolver:
        return CoordinateSolver([b.flat() for b in self.user_basis])

    @cached_property
    def structure_constants(self) -> Tensor:
        return _structure_constants(self.user_basis)

    def coordinates(self, x: QMatrix) -> tuple[Rational, ...]:
        """Coefficients of ``x`` in the presentation basis."""
        coords = self._solver(x.flat())
        if coords is None:
            raise NotClosed("matrix is not in the algebra")
        return coords

    def element(self, coords: Sequence) -> QMatrix:
        if len(coords) != self.dim:
            raise DimensionMismatch(f"{len(coords)} coordinates for a {self.dim}-dimensional algebra")
        acc = QMatrix.zero(self.ambient_dim)
        for c, b in zip(coords, self.user_basis):
            if c:
                acc = acc + b * c
        return acc

    def __repr__(self):
        return f"LieSubalgebra(dim={self.dim} in gl({self.ambient_dim}))"


def is_subalgebra(s: Subspace) -> bool:
    return all(s.contains(bracket(a, b)) for a, b in combinations(s.basis, 2))


def _structure_constants(basis: Sequence[QMatrix]) -> Tensor:
    solve = CoordinateSolver([b.flat() for b in basis])
    m = len(basis)
    zero = (Q(0),) * m
    c = [[zero] * m for _ in range(m)]
    for i, j in combinations(range(m), 2):
        coords = solve(bracket(basis[i], basis[j]).flat())
        if coords is None:
            raise NotClosed(f"bracket of basis elements {i} and {j} leaves the span")
        c[i][j] = coords
        c[j][i] = tuple(-v for v in coords)
    return tuple(tuple(row) for row in c)


def structure_constants(L: LieSubalgebra) -> Tensor:
    return L.structure_constants


def generate_lie(gens: Iterable[QMatrix], ambient_dim: int | None = None) -> LieSubalgebra:
    """Smallest Lie subalgebra containing ``gens``.

    Generators are kept in order (dropping dependent ones), then each round
    appends every bracket of the current basis that is not yet in the span.
    """
    gens = list(gens)
    if ambient_dim is None:
        if not gens:
            raise ValueError("ambient_dim required without generators")
        ambient_dim = gens[0].dim
    basis: list[QMatrix] = []
    space = Subspace.zero(ambient_dim)
    for g in gens:
        grown = space.extended(g)
        if grown is not space:
            basis.append(g)
            space = grown
    done = 0  # pairs among basis[:done] were bracketed in an earlier round
    while True:
        size = len(basis)
        for i, j in combinations(range(size), 2):
            if j < done:
                continue
            grown = space.extended(bracket(basis[i], basis[j]))
            if grown is not space:
                basis.append(bracket(basis[i], basis[j]))
                space = grown
        if len(basis) == size:
            break
        done = size
    return LieSubalgebra(space, basis, check=False)


def _bracket_span(xs: Sequence[QMatrix], ys: Sequence[QMatrix], ambient_dim: int) -> Subspace:
    return Subspace.span((bracket(x, y) for x in xs for y in ys), ambient_dim)


def derived_subalgebra(L: LieSubalgebra) -> Subspace:
    return Subspace.span((bracket(a, b) for a, b in combinations(L.space.basis, 2)), L.ambient_dim)


def lower_central_series(L: LieSubalgebra) -> list[Subspace]:
    """``C^1 = L, C^{k+1} = [L, C^k]``, up to the zero term or the first repeat."""
    series = [L.space]
    while series[-1].dim:
        nxt = _bracket_span(L.space.basis, series[-1].basis, L.ambient_dim)
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def nilindex(L: LieSubalgebra) -> int:
    series = lower_central_series(L)
    if series[-1].dim:
        raise NotNilpotent(f"lower central series stabilizes in dimension {series[-1].dim}")
    return len(series) - 1


def is_nilpotent_algebra(L: LieSubalgebra) -> bool:
    return lower_central_series(L)[-1].dim == 0


def is_filiform(L: LieSubalgebra) -> bool:
    return is_nilpotent_algebra(L) and L.dim >= 1 and nilindex(L) == L.dim - 1


def center(L: LieSubalgebra) -> Subspace:
    """Elements of L commuting with every basis element."""
    basis = L.space.basis
    n = L.ambient_dim
    if not basis:
        return Subspace.zero(n)
    # unknowns: coefficients over basis; one block of n^2 equations per basis element
    rows = []
    for bj in basis:
        cols = [bracket(bi, bj).flat() for bi in basis]
        rows.extend([col[r] for col in cols] for r in range(n * n))
    return Subspace.span((_combine(basis, v, n) for v in kernel(rows)), n)


def _combine(basis: Sequence[QMatrix], coeffs: Sequence, n: int) -> QMatrix:
    acc = QMatrix.zero(n)
    for c, b in zip(coeffs, basis):
        if c:
            acc = acc + b * c
    return acc


def is_ideal(s: Subspace, L: LieSubalgebra) -> bool:
    """``s`` inside L and ``[L, s]`` inside ``s``."""
    return L.space.contains_subspace(s) and all(
        s.contains(bracket(x, y)) for x in L.space.basis for y in s.basis
    )


@dataclass(frozen=True)
class UnipotenceCertificate:
    """Outcome of the Engel test.

    On success ``flag`` lists vectors v_1..v_n so that every element maps
    span(v_1..v_k) into span(v_1..v_{k-1}). On failure ``witness`` is an
    element of the algebra that is not nilpotent.
    """

    unipotent: bool
    flag: tuple[tuple[Rational, ...], ...] = ()
    witness: QMatrix | None = None
    witness_coords: tuple[Rational, ...] | None = None

    def __bool__(self):
        return self.unipotent


def _annihilator(vectors: Sequence[Sequence[Rational]], n: int) -> list[tuple[Rational, ...]]:
    """Row vectors whose common kernel is exactly ``span(vectors)``."""
    if not vectors:
        return [tuple(Q(int(i == j)) for j in range(n)) for i in range(n)]
    return kernel([list(v) for v in vectors], n)


def is_unipotent(L: LieSubalgebra, *, seed: int = 0, max_tries: int = 200) -> UnipotenceCertificate:
    """Decide whether every element of L is a nilpotent matrix.

    Repeatedly looks for a vector outside the current flag that all basis
    elements send into the flag. If the flag reaches full length the
    algebra is unipotent; if the search stalls, some element is not
    nilpotent and one is located by trying basis elements, pairwise sums,
    then seeded random combinations.
    """
    n = L.ambient_dim
    basis = L.space.basis
    flag: list[tuple[Rational, ...]] = []
    while len(flag) < n:
        proj = _annihilator(flag, n)
        rows = []
        for b in basis:
            for p in proj:
                rows.append(b.transpose().apply(p))  # p . (b v) == (b^T p) . v
        candidates = kernel(rows, n) if rows else [tuple(Q(int(i == j)) for j in range(n)) for i in range(n)]
        flag_rank = len(flag)
        new = None
        for v in candidates:
            _, _, r = rref(flag + [v])
            if r > flag_rank:
                new = v
                break
        if new is None:
            witness, coords = _find_non_nilpotent(L, seed, max_tries)
            return UnipotenceCertificate(False, witness=witness, witness_coords=coords)
        flag.append(new)
    return UnipotenceCertificate(True, flag=tuple(flag))


def _find_non_nilpotent(L: LieSubalgebra, seed: int, max_tries: int):
    m = L.dim
    tries: list[tuple] = []
    for i in range(m):
        tries.append(tuple(int(i == k) for k in range(m)))
    for i, j in combinations(range(m), 2):
        tries.append(tuple(int(k in (i, j)) for k in range(m)))
    rng = random.Random(seed)
    bound = 3
    for t in range(max_tries):
        tries.append(tuple(rng.randint(-bound, bound) for _ in range(m)))
        if t % 50 == 49:
            bound *= 4
    for coords in tries:
        x = L.element(coords)
        if not is_nilpotent_matrix(x):
            return x, tuple(Q(c) for c in coords)
    raise AssertionError("Engel test failed but no non-nilpotent element was found")  # pragma: no cover


# --- abstract structure-constant tensors ---------------------------------

def tensor_bracket(c: Tensor, u: Sequence, v: Sequence) -> tuple[Rational, ...]:
    m = len(c)
    out = [Q(0)] * m
    for i, ui in enumerate(u):
        if not ui:
            continue
        for j, vj in enumerate(v):
            if vj:
                w = ui * vj
                for k, ck in enumerate(c[i][j]):
                    if ck:
                        out[k] += w * ck
    return tuple(out)


def tensor_is_antisymmetric(c: Tensor) -> bool:
    m = len(c)
    return all(c[i][j][k] == -c[j][i][k] for i in range(m) for j in range(m) for k in range(m))


def tensor_jacobi_holds(c: Tensor) -> bool:
    m = len(c)
    for i in range(m):
        for j in range(m):
            for k in range(m):
                for l in range(m):
                    total = sum(
                        c[i][j][s] * c[s][k][l] + c[j][k][s] * c[s][i][l] + c[k][i][s] * c[s][j][l]
                        for s in range(m)
                    )
                    if total:
                        return False
    return True


def tensor_lower_central_dims(c: Tensor) -> list[int]:
    """Dimensions of the lower central series of an abstract Lie algebra."""
    m = len(c)
    units = [tuple(Q(int(i == k)) for k in range(m)) for i in range(m)]
    current = units
    dims = [m]
    while dims[-1]:
        red, _, rank = rref([tensor_bracket(c, u, v) for u in units for v in current] or [[0] * m])
        nxt = [tuple(r) for r in red[:rank]]
        if rank == dims[-1]:
            break
        dims.append(rank)
        current = nxt
    return dims


def tensor_nilindex(c: Tensor) -> int:
    dims = tensor_lower_central_dims(c)
    if dims[-1]:
        raise NotNilpotent("abstract algebra is not nilpotent")
    return len(dims) - 1


def tensor_to_lists(c: Tensor) -> list:
    return [[list(row) for row in plane] for plane in c]


__all__ = [
    "LieSubalgebra",
    "UnipotenceCertificate",
    "bracket",
    "center",
    "derived_subalgebra",
    "generate_lie",
    "is_filiform",
    "is_ideal",
    "is_nilpotent_algebra",
    "is_subalgebra",
    "is_unipotent",
    "lower_central_series",
    "nilindex",
    "structure_constants",
    "tensor_bracket",
    "tensor_is_antisymmetric",
    "tensor_jacobi_holds",
    "tensor_lower_central_dims",
    "tensor_nilindex",
]
