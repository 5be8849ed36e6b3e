import random

import pytest
from hypothesis import settings, strategies as st

from alglie.ratlinalg import Q, QMatrix

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

PARAMS = [(Q(1), Q(1)), (Q(2), Q(-1)), (Q(1, 2), Q(1, 2)), (Q(-3), Q(5))]

small_rationals = st.builds(Q, st.integers(-4, 4), st.integers(1, 3))
nonzero_rationals = small_rationals.filter(lambda q: q != 0)


@st.composite
def qmatrices(draw, min_dim=1, max_dim=4, dim=None):
    n = dim if dim is not None else draw(st.integers(min_dim, max_dim))
    return QMatrix([[draw(small_rationals) for _ in range(n)] for _ in range(n)])


@st.composite
def invertible_qmatrices(draw, n):
    # unit lower times unit upper triangular: always invertible
    lo = [[Q(1) if i == j else (draw(small_rationals) if j < i else Q(0)) for j in range(n)] for i in range(n)]
    up = [[Q(1) if i == j else (draw(small_rationals) if j > i else Q(0)) for j in range(n)] for i in range(n)]
    return QMatrix(lo) @ QMatrix(up)


@pytest.fixture(params=PARAMS, ids=lambda p: f"a={p[0]},b={p[1]}")
def ab(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(1234)
