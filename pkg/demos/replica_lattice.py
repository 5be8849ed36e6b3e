"""Replicas of a semisimple matrix come from integer relations among eigenvalues.

For a diagonal matrix the relation lattice lives on the distinct
eigenvalues. A diagonal Y with the same eigenspaces is a replica exactly
when its eigenvalues satisfy every one of those relations.

Run: python demos/replica_lattice.py
"""

from alglie import QMatrix, replica
from alglie.ratlinalg import Q
from alglie.reproduce import brute_force_replica

for values in ([1, 2], [0, 3, 3], [1, -1, 2, 0], [Q(1, 2), Q(1, 3)]):
    r = replica(QMatrix.diag(values))
    print(f"diag{tuple(str(v) for v in values)}")
    print("  relation lattice basis:", [list(p) for p in r.lattice.basis])
    print("  dim g(X_s) =", r.semisimple_replica.dim)
    if all(Q(v).denominator == 1 for v in values):
        print("  agrees with brute force:", r.semisimple_replica == brute_force_replica(values))

# a nilpotent part contributes its own line
x = QMatrix([[2, 1, 0], [0, 2, 0], [0, 0, -4]])
r = replica(x)
print("X with a 2x2 Jordan block: dim g(X) =", r.total.dim, "(semisimple", r.semisimple_replica.dim, "+ nilpotent", r.nilpotent_replica.dim, ")")
