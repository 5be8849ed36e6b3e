import random

import pytest
from hypothesis import given, strategies as st

from alglie import catalog
from alglie.errors import NotSemisimple, SplitFailure
from alglie.jordan import eigenstructure, is_nilpotent_matrix, is_semisimple, jordan_decompose
from alglie.ratlinalg import Q, QMatrix, QPoly, Subspace, bracket, minpoly, poly_gcd
from alglie.reproduce import displayed_x1_nilpotent, displayed_x1_semisimple, random_invertible, random_jordan_matrix

from conftest import invertible_qmatrices, nonzero_rationals, qmatrices

T = QPoly.T()


def assert_pair_invariants(x, jp):
    n = x.dim
    assert jp.semisimple + jp.nilpotent == x
    assert bracket(jp.semisimple, jp.nilpotent).is_zero()
    m = minpoly(jp.semisimple)
    assert poly_gcd(m, m.derivative()) == QPoly.const(1)
    assert (jp.nilpotent ** n).is_zero()
    s_poly, n_poly = jp.witness_polys
    assert s_poly(x) == jp.semisimple and n_poly(x) == jp.nilpotent


def test_heisenberg_x1_matches_display(ab):
    x1 = catalog.heisenberg_h(*ab).user_basis[0]
    jp = jordan_decompose(x1)
    assert jp.semisimple == displayed_x1_semisimple(*ab)
    assert jp.nilpotent == displayed_x1_nilpotent(*ab)
    assert jp.semisimple == catalog.x4(*ab)


def test_displayed_entries_at_one_one():
    xs = displayed_x1_semisimple(Q(1), Q(1))
    assert xs[2, 0] == 1 and xs[2, 3] == Q(1, 2)
    assert displayed_x1_nilpotent(Q(1), Q(1))[2, 0] == 0


def test_nilpotent_input_is_its_own_nilpotent_part():
    x = QMatrix([[0, 1, 5], [0, 0, 2], [0, 0, 0]])
    jp = jordan_decompose(x)
    assert jp.semisimple.is_zero() and jp.nilpotent == x


def test_semisimple_input():
    x = QMatrix([[1, 2], [0, 3]])
    jp = jordan_decompose(x)
    assert jp.semisimple == x and jp.nilpotent.is_zero()


def test_irrational_spectrum_still_decomposes():
    # (T^2 - 2)^2: companion-style block with an irrational repeated spectrum
    c = QMatrix([[0, 1, 0, 0], [2, 0, 0, 0], [1, 0, 0, 1], [0, 0, 2, 0]])
    jp = jordan_decompose(c)
    assert_pair_invariants(c, jp)
    assert not jp.nilpotent.is_zero()
    with pytest.raises(SplitFailure):
        eigenstructure(jp.semisimple)


def test_filiform_semisimple_formula():
    for n in (5, 6, 7):
        f = catalog.filiform_rep(n, 1, 1, 1)
        xs = jordan_decompose(f.x1).semisimple
        assert xs == f.x1 ** (n - 2) / 2 ** (n - 3)


def test_predicates(ab):
    x1, x2, _ = catalog.heisenberg_h(*ab).user_basis
    assert is_nilpotent_matrix(x1 - x2)
    eye = QMatrix.identity(3)
    assert is_semisimple(eye) and not is_nilpotent_matrix(eye)
    assert not is_semisimple(x1) and not is_nilpotent_matrix(x1)


def test_eigenstructure_examples():
    xs = jordan_decompose(catalog.heisenberg_h(1, 1).user_basis[0]).semisimple
    es = eigenstructure(xs)
    assert es.distinct_eigenvalues == (0, 2) and es.multiplicities == (3, 1)
    assert es.projections[1] == xs / 2
    es = eigenstructure(QMatrix.identity(3))
    assert es.distinct_eigenvalues == (1,) and es.projections == (QMatrix.identity(3),)
    es = eigenstructure(QMatrix.diag([1, 2, 3]))
    assert es.projections == tuple(QMatrix.diag([int(i == k) for i in range(3)]) for k in range(3))


def test_eigenstructure_rejects_non_semisimple():
    with pytest.raises(NotSemisimple):
        eigenstructure(QMatrix([[1, 1], [0, 1]]))
    with pytest.raises(SplitFailure):
        eigenstructure(QMatrix([[0, -1], [1, 0]]))


@given(qmatrices(max_dim=4))
def test_pair_invariants_random(x):
    assert_pair_invariants(x, jordan_decompose(x))


@given(qmatrices(max_dim=4))
def test_components_are_polynomials_in_x(x):
    jp = jordan_decompose(x)
    krylov = Subspace.span([x ** k for k in range(x.dim)], x.dim)
    assert krylov.contains(jp.semisimple) and krylov.contains(jp.nilpotent)


@given(qmatrices(max_dim=4), nonzero_rationals)
def test_scaling_equivariance(x, c):
    jp, jc = jordan_decompose(x), jordan_decompose(x * c)
    assert jc.semisimple == jp.semisimple * c and jc.nilpotent == jp.nilpotent * c


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(qmatrices(dim=n), invertible_qmatrices(n))))
def test_conjugation_equivariance(pair):
    x, p = pair
    pi = p.inverse()
    jp, jc = jordan_decompose(x), jordan_decompose(p @ x @ pi)
    assert jc.semisimple == p @ jp.semisimple @ pi
    assert jc.nilpotent == p @ jp.nilpotent @ pi


def test_against_jordan_form_oracle():
    rng = random.Random(7)
    for k in range(40):
        n = 2 + k % 5
        x, p, j = random_jordan_matrix(rng, n)
        d = QMatrix.diag([j[i, i] for i in range(n)])
        jp = jordan_decompose(x)
        assert jp.semisimple == p @ d @ p.inverse()
        es = eigenstructure(jp.semisimple)
        assert es.reconstruct() == jp.semisimple
        assert jp.nilpotent.trace() == 0
        assert x.trace() == sum(m * lam for m, lam in zip(es.multiplicities, es.distinct_eigenvalues))
        s = QMatrix.zero(n)
        for proj in es.projections:
            assert proj @ proj == proj
            s = s + proj
        assert s == QMatrix.identity(n)
        assert random_invertible(rng, n).inverse() is not None
