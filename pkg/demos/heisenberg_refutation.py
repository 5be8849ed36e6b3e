"""A three-dimensional nilpotent algebra in gl(4) that is not algebraic.

h(alpha, beta) is spanned by X1, X2, X3 with [X1, X2] = X3. X1 has a
nonzero eigenvalue, so it is not nilpotent, and its semisimple part falls
outside h. That single element is enough to refute algebraicity.

Run: python demos/heisenberg_refutation.py
"""

from alglie import catalog, check_algebraic, jordan_decompose, lower_central_series, structure_constants
from alglie.ratlinalg import Q, charpoly

alpha, beta = Q(2), Q(-1)
h = catalog.heisenberg_h(alpha, beta)
x1, x2, x3 = h.user_basis

print("dim h =", h.dim)
print("lower central series dims:", [s.dim for s in lower_central_series(h)])
print("matches the model L_3:", structure_constants(h) == catalog.model_Ln(3))
print("charpoly(X1) =", charpoly(x1))

jp = jordan_decompose(x1)
print("X1_s in h?", h.space.contains(jp.semisimple))
print("X1_n in h?", h.space.contains(jp.nilpotent))

v = check_algebraic(h)
print("verdict:", v.kind, "after", v.samples_checked, "sample(s)")
print("witness coordinates:", [str(c) for c in v.witness.coords], "failing part:", v.witness.part)
