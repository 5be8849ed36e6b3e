"""Grow h into the smallest algebraic algebra containing it.

The hull iteration adjoins whatever Jordan part or replica element escapes
the current algebra, then closes under brackets again. For h exactly one
matrix is adjoined, X4 = X1_s, giving a 4-dimensional algebra m. m then
splits as a unipotent ideal n1 plus a central torus a1.

Run: python demos/algebraic_hull.py
"""

from alglie import algebraic_hull, catalog, check_algebraic, nilpotent_decomposition

for alpha, beta in [(1, 1), (2, -1)]:
    h = catalog.heisenberg_h(alpha, beta)
    rep = algebraic_hull(h)
    print(f"alpha={alpha} beta={beta}: hull dim {rep.hull.dim} after {rep.rounds} round(s), valid={rep.valid}")
    for adj in rep.adjoined:
        print("  adjoined", adj.reason, "equal to X4:", adj.adjoined == catalog.x4(alpha, beta))
    print("  hull equals m:", rep.hull.space == catalog.hull_m(alpha, beta).space)

    m = catalog.hull_m(alpha, beta)
    print("  check_algebraic(m):", check_algebraic(m, samples=64).kind)
    dec = nilpotent_decomposition(m)
    print(f"  m = n ({dec.nil_part.dim}) + a ({dec.semisimple_part.dim}), valid={dec.valid}")
    bad = nilpotent_decomposition(h)
    print("  h decomposes?", bad.valid, "-", bad.reasons[0])
