"""Exact Chevalley-Jordan decomposition and spectral projections.

The semisimple part is found without eigenvalues: Newton's iteration for
the square-free part ``f`` of the characteristic polynomial (equivalently,
of the minimal polynomial, which has the same irreducible factors), run on
polynomials modulo the minimal polynomial, converges to a polynomial
``s`` with ``f(s(X)) = 0`` and ``X - s(X)`` nilpotent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotSemisimple
from .ratlinalg import QMatrix, QPoly, Rational, minpoly, poly_gcd, poly_xgcd, rational_roots, squarefree_part


@dataclass(frozen=True)
class JordanPair:
    semisimple: QMatrix
    nilpotent: QMatrix
    # X_s = semisimple_poly(X), X_n = nilpotent_poly(X)
    semisimple_poly: QPoly
    nilpotent_poly: QPoly
    # minimal polynomial of the semisimple part: the square-free part of minpoly(x)
    semisimple_minpoly: QPoly | None = field(default=None, compare=False, repr=False)

    @property
    def witness_polys(self) -> tuple[QPoly, QPoly]:
        return self.semisimple_poly, self.nilpotent_poly


@dataclass(frozen=True)
class Eigenstructure:
    distinct_eigenvalues: tuple[Rational, ...]
    multiplicities: tuple[int, ...]
    projections: tuple[QMatrix, ...]

    def reconstruct(self) -> QMatrix:
        """``sum(lambda_c * P_c)``."""
        n = self.projections[0].dim
        acc = QMatrix.zero(n)
        for lam, proj in zip(self.distinct_eigenvalues, self.projections):
            acc = acc + proj * lam
        return acc


def _compose_mod(p: QPoly, z: QPoly, m: QPoly) -> QPoly:
    acc = QPoly()
    for c in reversed(p.coeffs):
        acc = (acc * z + c) % m
    return acc


def jordan_decompose(x: QMatrix) -> JordanPair:
    """Split ``x`` into commuting semisimple and nilpotent parts.

    Both parts are polynomials in ``x``; the polynomials are returned too.
    """
    m = minpoly(x)
    f = squarefree_part(m)
    T = QPoly.T()
    if f.degree == m.degree:
        # minimal polynomial already square-free: x is semisimple
        s = T
    else:
        one, g, _ = poly_xgcd(f.derivative(), f)
        assert one == QPoly.const(1), "square-free part must be coprime to its derivative"
        s = T
        # multiplicities are at most deg m, so 2^k >= deg m iterations suffice
        for _ in range(m.degree.bit_length() + 1):
            fs = _compose_mod(f, s, m)
            if fs.is_zero():
                break
            s = (s - fs * _compose_mod(g, s, m)) % m
        else:  # pragma: no cover
            raise AssertionError("Newton iteration failed to converge")
    xs = s(x)
    return JordanPair(xs, x - xs, s, T - s, f)


def is_semisimple(x: QMatrix) -> bool:
    """True iff the minimal polynomial is square-free."""
    m = minpoly(x)
    return poly_gcd(m, m.derivative()).degree == 0


def is_nilpotent_matrix(x: QMatrix) -> bool:
    return (x ** x.dim).is_zero()


def eigenstructure(x_s: QMatrix, minimal: QPoly | None = None) -> Eigenstructure:
    """Spectral projections of a semisimple matrix with rational spectrum.

    ``minimal`` may supply the already known minimal polynomial of ``x_s``.
    Raises :class:`NotSemisimple` or :class:`~alglie.errors.SplitFailure`.
    """
    m = minimal if minimal is not None else minpoly(x_s)
    if poly_gcd(m, m.derivative()).degree != 0:
        raise NotSemisimple("minimal polynomial is not square-free")
    # m is square-free, so its roots are the distinct eigenvalues
    lams = tuple(r for r, _ in rational_roots(m))
    n = x_s.dim
    eye = QMatrix.identity(n)
    projections = []
    for lam in lams:
        proj = eye
        for other in lams:
            if other != lam:
                proj = proj @ (x_s - eye * other) / (lam - other)
        projections.append(proj)
    # the multiplicity of an eigenvalue is the rank, hence the trace, of its projection
    mults = tuple(int(p.trace()) for p in projections)
    return Eigenstructure(lams, mults, tuple(projections))
