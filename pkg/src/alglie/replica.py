"""Replica algebras g(X): the smallest algebraic subalgebra containing one matrix.

For the semisimple part the relevant data are the integer relations among
its distinct eigenvalues. A diagonalizable Y sharing X_s's eigenspaces,
acting by mu_c on the c-th eigenspace, is a replica exactly when mu
satisfies every integer relation the eigenvalues satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotNilpotent
from .jordan import JordanPair, eigenstructure, is_nilpotent_matrix, jordan_decompose
from .ratlinalg import IntegerLattice, QMatrix, QPoly, Subspace, integer_kernel, kernel


@dataclass(frozen=True)
class ReplicaResult:
    semisimple_replica: Subspace
    nilpotent_replica: Subspace
    total: Subspace
    lattice: IntegerLattice
    semisimple: QMatrix
    nilpotent: QMatrix


def replica_semisimple(x_s: QMatrix, minimal: QPoly | None = None) -> tuple[Subspace, IntegerLattice]:
    """g(x_s) together with the relation lattice over the distinct eigenvalues.

    Raises NotSemisimple or SplitFailure through :func:`eigenstructure`.
    """
    es = eigenstructure(x_s, minimal)
    d = len(es.distinct_eigenvalues)
    lattice = integer_kernel([es.distinct_eigenvalues], d)
    if lattice.rank:
        mus = kernel([list(p) for p in lattice.basis], d)
    else:
        mus = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    mats = []
    for mu in mus:
        acc = QMatrix.zero(x_s.dim)
        for m, proj in zip(mu, es.projections):
            if m:
                acc = acc + proj * m
        mats.append(acc)
    return Subspace.span(mats, x_s.dim), lattice


def replica_nilpotent(x_n: QMatrix) -> Subspace:
    if not is_nilpotent_matrix(x_n):
        raise NotNilpotent("replica_nilpotent needs a nilpotent matrix")
    return Subspace.span([x_n])


def replica(x: QMatrix, jp: JordanPair | None = None) -> ReplicaResult:
    """g(X) = g(X_s) + g(X_n). Raises SplitFailure for an irrational spectrum.

    ``jp`` may carry an already computed decomposition of ``x``.
    """
    if jp is None:
        jp = jordan_decompose(x)
    ss, lattice = replica_semisimple(jp.semisimple, jp.semisimple_minpoly)
    nn = replica_nilpotent(jp.nilpotent)
    return ReplicaResult(ss, nn, ss + nn, lattice, jp.semisimple, jp.nilpotent)
