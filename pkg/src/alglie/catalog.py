"""Exact constructors for the worked examples.

* ``heisenberg_h``: a 3-dimensional Heisenberg algebra inside gl(4) that is
  not algebraic, for parameters alpha + beta != 0.
* ``hull_m``, ``x4``, ``nilradical_n1``, ``torus_a1``: its algebraic hull
  and the hull's nilpotent/semisimple splitting.
* ``filiform_rep``: a family of n-dimensional filiform algebras in
  gl(n+1) generated by two explicit matrices, with a report comparing the
  generated algebra against the model filiform algebra L_n.
* ``model_Ln``: structure constants of L_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import NotClosed, ParamDomain
from .liealg import LieSubalgebra, Tensor, bracket, generate_lie
from .ratlinalg import CoordinateSolver, Q, QMatrix, Subspace


def _check_ab(alpha, beta):
    alpha, beta = Q(alpha), Q(beta)
    if alpha + beta == 0:
        raise ParamDomain(f"alpha + beta must be nonzero (got alpha={alpha}, beta={beta})")
    return alpha, beta


def h_element(alpha, beta, x1, x2, x3) -> QMatrix:
    alpha, beta = _check_ab(alpha, beta)
    x1, x2, x3 = Q(x1), Q(x2), Q(x3)
    s = x1 + x2
    return QMatrix([
        [s, s, 0, x1],
        [s, s, 0, x2],
        [alpha * x1 + (beta - 1) * x2, beta * x1 + (alpha + 1) * x2, 0, x3],
        [0, 0, 0, 0],
    ])


def heisenberg_h(alpha, beta) -> LieSubalgebra:
    """The algebra h(alpha, beta) with presentation basis X1, X2, X3."""
    alpha, beta = _check_ab(alpha, beta)
    x1 = h_element(alpha, beta, 1, 0, 0)
    x2 = h_element(alpha, beta, 0, 1, 0)
    x3 = h_element(alpha, beta, 0, 0, 1)
    if bracket(x1, x2) != x3 or not bracket(x1, x3).is_zero() or not bracket(x2, x3).is_zero():
        raise NotClosed("h basis does not satisfy [X1,X2]=X3, [X1,X3]=[X2,X3]=0")  # pragma: no cover
    return LieSubalgebra.from_basis([x1, x2, x3])


def x4(alpha, beta) -> QMatrix:
    alpha, beta = _check_ab(alpha, beta)
    h = (alpha + beta) / 2
    q = (alpha + beta) / 4
    half = Q(1, 2)
    return QMatrix([
        [1, 1, 0, half],
        [1, 1, 0, half],
        [h, h, 0, q],
        [0, 0, 0, 0],
    ])


def m_element(alpha, beta, x1, x2, x3, x4_) -> QMatrix:
    alpha, beta = _check_ab(alpha, beta)
    x1, x2, x3, x4_ = Q(x1), Q(x2), Q(x3), Q(x4_)
    s = x1 + x2 + x4_
    h = (alpha + beta) / 2
    return QMatrix([
        [s, s, 0, x1 + x4_ / 2],
        [s, s, 0, x2 + x4_ / 2],
        [alpha * x1 + (beta - 1) * x2 + h * x4_, beta * x1 + (alpha + 1) * x2 + h * x4_, 0, x3 + (alpha + beta) / 4 * x4_],
        [0, 0, 0, 0],
    ])


def hull_m(alpha, beta) -> LieSubalgebra:
    """The 4-dimensional hull m(alpha, beta) with basis X1, X2, X3, X4."""
    basis = [m_element(alpha, beta, *(int(i == k) for k in range(4))) for i in range(4)]
    if any(not bracket(b, basis[3]).is_zero() for b in basis[:3]):
        raise NotClosed("X4 does not commute with X1, X2, X3")  # pragma: no cover
    return LieSubalgebra.from_basis(basis)


def n1_element(alpha, beta, x1, x2, x3) -> QMatrix:
    alpha, beta = _check_ab(alpha, beta)
    x1, x2, x3 = Q(x1), Q(x2), Q(x3)
    return QMatrix([
        [0, 0, 0, x1 / 2 - x2 / 2],
        [0, 0, 0, -x1 / 2 + x2 / 2],
        [(alpha - beta) / 2 * x1 + (-alpha + beta - 2) / 2 * x2,
         (-alpha + beta) / 2 * x1 + (alpha - beta + 2) / 2 * x2,
         0,
         x3 + (alpha + beta) / 4 * (-x1 - x2)],
        [0, 0, 0, 0],
    ])


def nilradical_n1(alpha, beta) -> Subspace:
    return Subspace.span([n1_element(alpha, beta, *(int(i == k) for k in range(3))) for i in range(3)])


def torus_a1(alpha, beta) -> Subspace:
    return Subspace.span([x4(alpha, beta)])


# --- filiform family -------------------------------------------------------

def model_Ln(n: int) -> Tensor:
    """Structure constants of L_n: [X1, Xi] = X(i+1) for 2 <= i <= n-1 (0-based tensor)."""
    if n < 3:
        raise ParamDomain("L_n is defined for n >= 3")
    zero = Q(0)
    c = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(1, n - 1):
        c[0][i][i + 1] = Q(1)
        c[i][0][i + 1] = Q(-1)
    return tuple(tuple(tuple(row) for row in plane) for plane in c)


def filiform_generators(n: int, a, alpha, beta) -> tuple[QMatrix, QMatrix]:
    """The two (n+1) x (n+1) matrices generating h_n, entry for entry.

    Rows/columns are 0-based. Subdiagonal entries sit at (i, i-1) for
    3 <= i <= n-1: (i-2)/(i-1) in X1 and 1/(i-1) in X2.
    """
    n = int(n)
    a, alpha, beta = Q(a), Q(alpha), Q(beta)
    if n == 3:
        raise ParamDomain("the filiform family starts at n = 4; for n = 3 use heisenberg_h")
    if n < 4:
        raise ParamDomain(f"filiform family needs n >= 4 (got {n})")
    if a == 0:
        raise ParamDomain("filiform family needs a != 0")
    size = n + 1
    r1 = [[Q(0)] * size for _ in range(size)]
    r2 = [[Q(0)] * size for _ in range(size)]
    for rows in (r1, r2):
        for i in (0, 1):
            for j in (0, 1):
                rows[i][j] = a
    r1[0][n] = Q(1)
    r2[1][n] = Q(1)
    r2[2][0] = Q(-1)
    r2[2][1] = Q(1)
    for i in range(3, n):
        r1[i][i - 1] = Q(i - 2, i - 1)
        r2[i][i - 1] = Q(1, i - 1)
    # row n-1 also carries the alpha/beta entries (n = 4 puts them next to the 1/2)
    r1[n - 1][0] += alpha
    r1[n - 1][1] += beta
    r2[n - 1][0] += beta
    r2[n - 1][1] += alpha
    return QMatrix(r1), QMatrix(r2)


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    holds: bool
    detail: str = ""


@dataclass(frozen=True)
class ComparisonReport:
    n: int
    chain: tuple[QMatrix, ...]
    checks: tuple[RelationCheck, ...]
    generated_dim: int

    @property
    def confirmed(self) -> bool:
        return all(c.holds for c in self.checks)

    @property
    def first_failure(self) -> RelationCheck | None:
        return next((c for c in self.checks if not c.holds), None)


@dataclass(frozen=True)
class FiliformRep:
    x1: QMatrix
    x2: QMatrix
    generated: LieSubalgebra
    report: ComparisonReport


def compare_with_model(n: int, x1: QMatrix, x2: QMatrix, generated: LieSubalgebra) -> ComparisonReport:
    """Check X3..Xn defined by Xi = [X1, X(i-1)] against the L_n relations, item by item."""
    chain = [x1, x2]
    for _ in range(3, n + 1):
        chain.append(bracket(x1, chain[-1]))
    checks = []
    for i in range(1, n):
        label = f"X{i + 2} = [X1, X{i + 1}] is nonzero" if i < n - 1 else f"[X1, X{n}] = 0"
        if i < n - 1:
            checks.append(RelationCheck(label, not chain[i + 1].is_zero()))
        else:
            checks.append(RelationCheck(label, bracket(x1, chain[i]).is_zero()))
    for i, j in combinations(range(1, n), 2):
        br = bracket(chain[i], chain[j])
        checks.append(RelationCheck(f"[X{i + 1}, X{j + 1}] = 0", br.is_zero()))
    span = Subspace.span(chain)
    checks.append(RelationCheck(f"X1..X{n} linearly independent", span.dim == n, f"rank {span.dim}"))
    checks.append(RelationCheck(f"generated algebra has dimension {n}", generated.dim == n, f"dimension {generated.dim}"))
    tensor_ok = False
    detail = "skipped: chain is not a basis of the generated algebra"
    if span.dim == n and span == generated.space:
        solve = CoordinateSolver([m.flat() for m in chain])
        target = model_Ln(n)
        mismatches = []
        for i, j in combinations(range(n), 2):
            coords = solve(bracket(chain[i], chain[j]).flat())
            if coords != target[i][j]:
                mismatches.append(f"[X{i + 1}, X{j + 1}]")
        tensor_ok = not mismatches
        detail = "all brackets match" if tensor_ok else "mismatch at " + ", ".join(mismatches)
    checks.append(RelationCheck(f"structure constants equal those of L_{n}", tensor_ok, detail))
    return ComparisonReport(n, tuple(chain), tuple(checks), generated.dim)


def filiform_rep(n: int, a, alpha, beta) -> FiliformRep:
    x1, x2 = filiform_generators(n, a, alpha, beta)
    generated = generate_lie([x1, x2])
    return FiliformRep(x1, x2, generated, compare_with_model(int(n), x1, x2, generated))
