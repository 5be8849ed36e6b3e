"""Split a matrix into commuting semisimple and nilpotent parts, exactly.

Run: python demos/jordan_decomposition.py
"""

from alglie import QMatrix, eigenstructure, jordan_decompose
from alglie.ratlinalg import Q, bracket, charpoly, minpoly


def show(name, m):
    print(f"{name} =")
    for row in m.rows:
        print("   ", "  ".join(f"{str(v):>5}" for v in row))


x = QMatrix([
    [3, 1, 0, Q(1, 2)],
    [0, 3, 0, 0],
    [0, 0, -1, 1],
    [0, 0, 0, -1],
])
show("X", x)
print("charpoly:", charpoly(x))
print("minpoly: ", minpoly(x))

jp = jordan_decompose(x)
show("X_s", jp.semisimple)
show("X_n", jp.nilpotent)
s_poly, n_poly = jp.witness_polys
print("X_s = p(X) with p =", s_poly)

assert jp.semisimple + jp.nilpotent == x
assert bracket(jp.semisimple, jp.nilpotent).is_zero()
assert (jp.nilpotent ** 4).is_zero()

es = eigenstructure(jp.semisimple)
for lam, mult, proj in zip(es.distinct_eigenvalues, es.multiplicities, es.projections):
    print(f"eigenvalue {lam} with multiplicity {mult}, projection of rank {proj.trace()}")
assert es.reconstruct() == jp.semisimple
