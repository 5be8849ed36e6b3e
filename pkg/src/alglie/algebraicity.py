"""Algebraicity checks, algebraic hulls and the nilpotent/semisimple splitting.

A Lie algebra of matrices is algebraic iff it contains g(X) for every
element X. Refutations here are exact: the witness and the matrix that
escapes are returned. Confirmations are relative to a finite, seeded
population of elements and say so in their kind.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal

from .errors import NotNilpotentAlgebra, RoundLimitExceeded, SplitFailure
from .jordan import is_semisimple, jordan_decompose
from .liealg import LieSubalgebra, bracket, derived_subalgebra, generate_lie, is_ideal, is_nilpotent_algebra, is_unipotent
from .ratlinalg import Q, QMatrix, Rational, Subspace
from .replica import replica

VerdictKind = Literal["NotAlgebraic", "ClosedOnSamples", "PerfectHenceAlgebraic"]
FailingPart = Literal["semisimple-part", "nilpotent-part", "replica"]

DEFAULT_SAMPLES = 32
DEFAULT_BOUND = 5
DEFAULT_SEED = 0
DEFAULT_MAX_ROUNDS = 16


@dataclass(frozen=True)
class Witness:
    element: QMatrix
    coords: tuple[Rational, ...]
    part: FailingPart
    failing_matrix: QMatrix


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    witness: Witness | None = None
    samples_checked: int = 0
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    bound: int = DEFAULT_BOUND
    # population indices whose spectrum was irrational, so only X_s and X_n were checked
    split_failures: tuple[int, ...] = ()

    @property
    def is_refutation(self) -> bool:
        return self.kind == "NotAlgebraic"


def sample_population(dim: int, samples: int, bound: int, seed: int) -> list[tuple[int, ...]]:
    """Coordinate vectors: unit vectors, pairwise sums, then seeded random ones."""
    if dim == 0:
        return []
    pop = [tuple(int(i == k) for k in range(dim)) for i in range(dim)]
    pop += [tuple(int(k in (i, j)) for k in range(dim)) for i, j in combinations(range(dim), 2)]
    rng = random.Random(seed)
    pop += [tuple(rng.randint(-bound, bound) for _ in range(dim)) for _ in range(samples)]
    return pop


def _escape(space: Subspace, x: QMatrix):
    """First part of g(x) that leaves ``space`` as (part, matrix), or None.

    Returns a third flag telling whether the replica step was skipped
    because of an irrational spectrum.
    """
    jp = jordan_decompose(x)
    if not space.contains(jp.semisimple):
        return ("semisimple-part", jp.semisimple), False
    if not space.contains(jp.nilpotent):
        return ("nilpotent-part", jp.nilpotent), False
    try:
        rep = replica(x, jp)
    except SplitFailure:
        return None, True
    for b in rep.total.basis:
        if not space.contains(b):
            return ("replica", b), False
    return None, False


def check_algebraic(
    L: LieSubalgebra,
    samples: int = DEFAULT_SAMPLES,
    bound: int = DEFAULT_BOUND,
    seed: int = DEFAULT_SEED,
) -> Verdict:
    """Refute algebraicity by witness, or report closure on the sample population.

    Perfect algebras (equal to their derived algebra) are algebraic and
    skip sampling.
    """
    if derived_subalgebra(L) == L.space:
        return Verdict("PerfectHenceAlgebraic", seed=seed, samples=samples, bound=bound)
    pop = sample_population(L.dim, samples, bound, seed)
    split = []
    for idx, coords in enumerate(pop):
        x = L.element(coords)
        esc, skipped = _escape(L.space, x)
        if skipped:
            split.append(idx)
        if esc is not None:
            part, mat = esc
            wit = Witness(x, tuple(Q(c) for c in coords), part, mat)
            return Verdict("NotAlgebraic", wit, idx + 1, seed, samples, bound, tuple(split))
    return Verdict("ClosedOnSamples", None, len(pop), seed, samples, bound, tuple(split))


@dataclass(frozen=True)
class Adjunction:
    source: QMatrix
    adjoined: QMatrix
    reason: FailingPart


@dataclass(frozen=True)
class HullReport:
    hull: LieSubalgebra
    rounds: int
    adjoined: tuple[Adjunction, ...]
    valid: bool = True
    verdict: Verdict | None = None


def algebraic_hull(
    L: LieSubalgebra,
    samples: int = DEFAULT_SAMPLES,
    bound: int = DEFAULT_BOUND,
    seed: int = DEFAULT_SEED,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    *,
    raise_on_limit: bool = False,
) -> HullReport:
    """Adjoin Jordan parts and replicas until a full round adds nothing.

    Each adjunction updates the working span at once, so later elements in
    the same round see it. The bracket closure is retaken at the end of
    every productive round. Hitting ``max_rounds`` yields ``valid=False``
    (or :class:`RoundLimitExceeded` when ``raise_on_limit``).
    """
    n = L.ambient_dim
    full = n * n
    current = L
    log: list[Adjunction] = []
    rounds = 0
    converged = False
    while rounds < max_rounds:
        rounds += 1
        basis = list(current.user_basis)
        space = current.space
        added = False
        for coords in sample_population(current.dim, samples, bound, seed):
            x = current.element(coords)
            while True:
                esc, _ = _escape(space, x)
                if esc is None:
                    break
                part, mat = esc
                log.append(Adjunction(x, mat, part))
                basis.append(mat)
                space = Subspace.span(basis, n)
                added = True
        if not added:
            converged = True
            break
        current = generate_lie(basis, n)
        if current.dim == full:
            converged = True
            break
    verdict = check_algebraic(current, samples, bound, seed)
    report = HullReport(current, rounds, tuple(log), converged and not verdict.is_refutation, verdict)
    if not converged and raise_on_limit:
        raise RoundLimitExceeded(report)
    return report


@dataclass(frozen=True)
class NilpotentDecomposition:
    nil_part: Subspace
    semisimple_part: Subspace
    valid: bool
    reasons: tuple[str, ...] = field(default=())

    @property
    def reason(self) -> str | None:
        return "; ".join(self.reasons) if self.reasons else None


def nilpotent_decomposition(L: LieSubalgebra) -> NilpotentDecomposition:
    """Split a nilpotent algebra as (nilpotent ideal) + (central torus).

    The two parts are spanned by the Jordan components of the basis. Every
    property the splitting should have is checked, and each failure is
    listed in ``reasons``.
    """
    if not is_nilpotent_algebra(L):
        raise NotNilpotentAlgebra("nilpotent_decomposition needs a nilpotent Lie algebra")
    n = L.ambient_dim
    pairs = [jordan_decompose(b) for b in L.user_basis]
    nil = Subspace.span([p.nilpotent for p in pairs], n)
    ss = Subspace.span([p.semisimple for p in pairs], n)
    reasons = []
    for i, (b, p) in enumerate(zip(L.user_basis, pairs)):
        if not L.space.contains(p.semisimple):
            reasons.append(f"semisimple part of basis element {i} is outside the algebra")
        if not L.space.contains(p.nilpotent):
            reasons.append(f"nilpotent part of basis element {i} is outside the algebra")
    if not reasons:
        if (nil + ss) != L.space:
            reasons.append("parts do not sum to the algebra")
        if nil.dim + ss.dim != L.dim:
            reasons.append("sum of the parts is not direct")
        if not is_ideal(nil, L):
            reasons.append("nilpotent part is not an ideal")
        elif not is_unipotent(LieSubalgebra(nil, check=False)):
            reasons.append("nilpotent part is not unipotent")
        if any(not bracket(a, x).is_zero() for a in ss.basis for x in L.space.basis):
            reasons.append("semisimple part is not central")
        if not all(is_semisimple(a) for a in ss.basis):
            reasons.append("semisimple part has a non-semisimple basis element")
    return NilpotentDecomposition(nil, ss, not reasons, tuple(reasons))
