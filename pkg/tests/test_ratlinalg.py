import pytest
from hypothesis import given, strategies as st

from alglie import catalog
from alglie.errors import DimensionMismatch, NotInSpan, SplitFailure
from alglie.jordan import jordan_decompose
from alglie.ratlinalg import (
    CoordinateSolver,
    IntegerLattice,
    Q,
    QMatrix,
    QPoly,
    Subspace,
    bracket,
    charpoly,
    hermite_normal_form,
    integer_kernel,
    kernel,
    minpoly,
    poly_gcd,
    poly_xgcd,
    rational_roots,
    rational_str,
    rref,
    solve_coordinates,
    span_contains,
    squarefree_part,
    subspace_equal,
    subspace_sum,
)

from conftest import invertible_qmatrices, nonzero_rationals, qmatrices, small_rationals

T = QPoly.T()


# --- scalars ----------------------------------------------------------------

def test_q_is_lowest_terms():
    q = Q(6, -4)
    assert (q.numerator, q.denominator) == (-3, 2)
    assert Q("10/4") == Q(5, 2)


@pytest.mark.parametrize("bad", [0.5, True, None, [1]])
def test_q_rejects_inexact(bad):
    with pytest.raises(TypeError):
        Q(bad)


def test_rational_str():
    assert rational_str(Q(3)) == "3"
    assert rational_str(Q(-6, 4)) == "-3/2"


# --- matrices -----------------------------------------------------------------

def test_qmatrix_must_be_square():
    with pytest.raises(ValueError):
        QMatrix([[1, 2]])
    with pytest.raises(ValueError):
        QMatrix([])


def test_matrix_arithmetic():
    a = QMatrix([[1, 2], [3, 4]])
    b = QMatrix([[0, 1], [1, 0]])
    assert a @ b == QMatrix([[2, 1], [4, 3]])
    assert a + b - b == a
    assert (a * Q(1, 2)) * 2 == a
    assert a.trace() == 5
    assert a @ a.inverse() == QMatrix.identity(2)
    assert a ** -1 == a.inverse()
    assert a ** 0 == QMatrix.identity(2)


def test_singular_inverse():
    with pytest.raises(ZeroDivisionError):
        QMatrix([[1, 2], [2, 4]]).inverse()


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        bracket(QMatrix.identity(2), QMatrix.identity(3))


def test_bracket_examples():
    h = catalog.heisenberg_h(1, 1)
    x1, x2, x3 = h.user_basis
    assert bracket(x1, x2) == x3
    assert bracket(x1, x1).is_zero()


@given(qmatrices(dim=3), qmatrices(dim=3))
def test_bracket_antisymmetric(a, b):
    assert bracket(a, b) == -bracket(b, a)


# --- rref / kernel ------------------------------------------------------------

def test_rref_examples():
    assert rref([[0, 0], [0, 0]]) == ([[0, 0], [0, 0]], [], 0)
    eye = [[int(i == j) for j in range(3)] for i in range(3)]
    assert rref(eye) == (eye, [0, 1, 2], 3)
    red, piv, rank = rref([[1, 2], [2, 4]])
    assert red == [[1, 2], [0, 0]] and piv == [0] and rank == 1


def test_kernel_examples():
    assert kernel([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []
    assert len(kernel([[0, 0, 0], [0, 0, 0]])) == 3
    k = kernel([[1, 1, 0]])
    assert len(k) == 2
    assert Subspace.span([QMatrix.from_flat(2, list(v) + [0]) for v in k]).contains(QMatrix.from_flat(2, [1, -1, 0, 0]))


rect = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 5).flatmap(lambda c: st.lists(st.lists(small_rationals, min_size=c, max_size=c), min_size=r, max_size=r))
)


@given(rect)
def test_rref_idempotent_and_rank_nullity(m):
    red, piv, rank = rref(m)
    assert rref(red) == (red, piv, rank)
    ker = kernel(m)
    assert rank + len(ker) == len(m[0])
    for v in ker:
        for row in m:
            assert sum(a * b for a, b in zip(row, v)) == 0


def test_solve_coordinates_and_solver():
    vecs = [(1, 0, 1), (0, 1, 1)]
    assert solve_coordinates(vecs, (2, 3, 5)) == (2, 3)
    assert solve_coordinates(vecs, (1, 1, 0)) is None
    solve = CoordinateSolver(vecs)
    assert solve((2, 3, 5)) == (2, 3)
    assert solve((1, 1, 0)) is None
    with pytest.raises(ValueError):
        CoordinateSolver([(1, 1), (2, 2)])


# --- subspaces ----------------------------------------------------------------

def test_span_contains_examples():
    h = catalog.heisenberg_h(1, 1)
    x1 = h.user_basis[0]
    assert span_contains(h.space, x1)
    assert not span_contains(h.space, jordan_decompose(x1).semisimple)
    assert span_contains(h.space, QMatrix.zero(4))
    with pytest.raises(DimensionMismatch):
        span_contains(h.space, QMatrix.identity(3))


def test_subspace_sum_examples(ab):
    h = catalog.heisenberg_h(*ab)
    zero = Subspace.zero(4)
    assert subspace_sum(h.space, zero) == h.space
    line = Subspace.span([catalog.x4(*ab)])
    s = subspace_sum(h.space, line)
    assert s.dim == 4 and s == catalog.hull_m(*ab).space
    assert subspace_equal(subspace_sum(h.space, line), subspace_sum(line, h.space))


def test_subspace_canonical_and_coordinates():
    a, b = QMatrix([[1, 2], [0, 0]]), QMatrix([[0, 1], [1, 0]])
    s1 = Subspace.span([a, b])
    s2 = Subspace.span([a + b, a - b * 3, a])
    assert s1 == s2 and hash(s1) == hash(s2)
    x = a * 3 + b
    c = s1.coordinates(x)
    assert sum((m * k for m, k in zip(s1.basis, c)), QMatrix.zero(2)) == x
    with pytest.raises(NotInSpan):
        s1.coordinates(QMatrix.identity(2))


def test_extended_matches_span():
    mats = [QMatrix([[1, 2], [3, 4]]), QMatrix([[0, 1], [0, 0]]), QMatrix([[2, 5], [6, 8]]), QMatrix([[1, 0], [0, 0]])]
    s = Subspace.zero(2)
    for k, m in enumerate(mats):
        s = s.extended(m)
        assert s == Subspace.span(mats[:k + 1])


def test_intersection():
    e = lambda i: QMatrix.from_flat(2, [int(k == i) for k in range(4)])  # noqa: E731
    a = Subspace.span([e(0), e(1)])
    b = Subspace.span([e(1), e(2)])
    assert a.intersection(b) == Subspace.span([e(1)])
    assert a.intersection(Subspace.zero(2)).dim == 0


@given(qmatrices(dim=2), qmatrices(dim=2), small_rationals)
def test_span_closed_under_combination(x, y, c):
    s = Subspace.span([x, y])
    assert s.contains(x) and s.contains(y) and s.contains(x + y * c)


# --- polynomials --------------------------------------------------------------

def test_poly_basics():
    p = T ** 3 * (T - 2)
    assert p.degree == 4 and p.is_monic()
    assert str(p) == "T^4 - 2*T^3"
    q, r = divmod(p, T - 2)
    assert q == T ** 3 and r.is_zero()
    assert p(Q(2)) == 0
    assert p(T + 1) == (T + 1) ** 3 * (T - 1)
    assert QPoly().degree == -1


def test_squarefree_and_gcd():
    assert squarefree_part(T ** 3 * (T - 2)) == T * (T - 2)
    p = (T - 1) * (T + Q(1, 2))
    assert squarefree_part(p * 3) == p
    assert poly_gcd(T ** 2, T ** 3) == T ** 2
    with pytest.raises(ValueError):
        squarefree_part(QPoly())


@given(st.lists(small_rationals, min_size=2, max_size=5), st.lists(small_rationals, min_size=1, max_size=4))
def test_xgcd_bezout(pc, qc):
    p, q = QPoly(pc), QPoly(qc)
    if p.is_zero() and q.is_zero():
        return
    g, s, t = poly_xgcd(p, q)
    assert s * p + t * q == g
    assert g.is_monic()
    assert (p % g).is_zero() and (q % g).is_zero()


@given(st.lists(small_rationals, min_size=2, max_size=6))
def test_squarefree_coprime_to_derivative(coeffs):
    p = QPoly(coeffs)
    if p.degree < 1:
        return
    f = squarefree_part(p)
    assert poly_gcd(f, f.derivative()) == QPoly.const(1)


def test_rational_roots_examples():
    assert rational_roots(T ** 3 * (T - 2)) == [(0, 3), (2, 1)]
    assert rational_roots((T - Q(1, 2)) ** 2) == [(Q(1, 2), 2)]
    with pytest.raises(SplitFailure) as err:
        rational_roots(T ** 2 + 1)
    assert err.value.factor == T ** 2 + 1
    with pytest.raises(SplitFailure):
        rational_roots((T - 1) * (T ** 2 - 2))


@given(st.lists(st.tuples(small_rationals, st.integers(1, 3)), min_size=1, max_size=3, unique_by=lambda t: t[0]))
def test_rational_roots_recover(roots):
    p = QPoly.from_roots(roots) * Q(-7, 3)
    assert rational_roots(p) == sorted(roots)


# --- characteristic and minimal polynomial ------------------------------------

def test_charpoly_examples():
    assert charpoly(QMatrix.zero(3)) == T ** 3
    x1 = catalog.heisenberg_h(1, 1).user_basis[0]
    assert charpoly(x1) == T ** 3 * (T - 2)
    assert charpoly(jordan_decompose(x1).semisimple) == T ** 3 * (T - 2)


def test_minpoly_examples():
    assert minpoly(QMatrix.identity(4)) == T - 1
    f = catalog.filiform_rep(5, 1, 1, 1)
    assert minpoly(f.x1) == T ** 3 * (T - 2)
    xs = jordan_decompose(catalog.heisenberg_h(1, 1).user_basis[0]).semisimple
    assert xs @ xs == xs * 2
    assert minpoly(xs) == T * (T - 2)
    assert minpoly(QMatrix.zero(2)) == T


@given(qmatrices(max_dim=4))
def test_minpoly_divides_charpoly_and_annihilates(a):
    m, c = minpoly(a), charpoly(a)
    assert m.is_monic() and (c % m).is_zero()
    assert m(a).is_zero()
    assert c(a).is_zero()
    # minimality: I, a, ..., a^(deg m - 1) are independent
    assert Subspace.span([a ** k for k in range(m.degree)], a.dim).dim == m.degree


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(qmatrices(dim=n), invertible_qmatrices(n))))
def test_charpoly_conjugation_invariant(pair):
    a, p = pair
    assert charpoly(p @ a @ p.inverse()) == charpoly(a)


def test_charpoly_trace_det():
    a = QMatrix([[2, 1, 0], [0, 3, Q(1, 2)], [1, 0, -1]])
    c = charpoly(a)
    assert c.coeffs[2] == -a.trace()


# --- integer lattices ---------------------------------------------------------

def test_integer_kernel_examples():
    assert integer_kernel([[0, 2]]).basis == ((1, 0),)
    assert integer_kernel([[1, 2]]).basis == ((2, -1),)
    lat = integer_kernel([[0, 0, 0]])
    assert lat.rank == 3 and lat.contains((5, -2, 7))
    assert integer_kernel([[Q(1, 2), Q(1, 3)]]).basis == ((2, -3),)


def test_hermite_normal_form_canonical():
    a = hermite_normal_form([[2, 4], [1, 3], [3, 7]])
    b = hermite_normal_form([[1, 3], [0, 2]])
    assert a == b
    lat = IntegerLattice.from_generators(2, [[2, 4], [1, 3]])
    assert lat.contains((0, 2)) and not lat.contains((0, 1))


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=3))
def test_integer_kernel_brute_force(values):
    d = len(values)
    lat = integer_kernel([values])
    for p in lat.basis:
        assert sum(a * b for a, b in zip(p, values)) == 0
    import itertools
    for p in itertools.product(range(-3, 4), repeat=d):
        if sum(a * b for a, b in zip(p, values)) == 0:
            assert lat.contains(p)
