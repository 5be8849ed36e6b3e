"""A filiform family h_n in gl(n+1) built from two explicit generators.

For each n the script builds X1 and X2, closes them under brackets, checks
the result against the model filiform algebra L_n, and looks at the
minimal polynomial and semisimple part of X1.

At n = 4 the minimal polynomial is T^2 (T - 2a) only when alpha = beta.
Otherwise an extra nilpotent step appears, so the nilpotent exponent is 3.

Run: python demos/filiform_family.py
"""

from alglie import catalog, check_algebraic, jordan_decompose, minpoly
from alglie.ratlinalg import Q

a = Q(1, 3)
for alpha, beta in [(Q(1), Q(1)), (Q(2), Q(-1))]:
    print(f"alpha={alpha} beta={beta} a={a}")
    for n in range(4, 8):
        f = catalog.filiform_rep(n, a, alpha, beta)
        m = minpoly(f.x1)
        xs = jordan_decompose(f.x1).semisimple
        k = m.degree - 1  # exponent of T in T^k (T - 2a)
        formula = f.x1 ** k / (2 * a) ** (k - 1)
        print(
            f"  n={n}: generated dim {f.generated.dim}, L_n confirmed {f.report.confirmed}, "
            f"minpoly {m}, X1_s = X1^{k}/(2a)^{k - 1}: {xs == formula}, "
            f"X1_s in h_n: {f.generated.space.contains(xs)}, verdict {check_algebraic(f.generated).kind}"
        )
