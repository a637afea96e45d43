"""Intersection forms: invariants, explicit reduction and a brute-force check.

Invariant-based classification says two unimodular forms of the same rank,
signature and parity are congruent.  For small matrices we can confirm it by
searching all integer changes of basis.
"""

from orbitcalc import IntSymMatrix, brute_force_congruent, classify, invariants, reduce_trace
from orbitcalc.intforms import apply_steps

for rows in ([[1, 1], [1, 2]], [[-1, 1], [1, -2]], [[4, 1], [1, 0]], [[2, 1, 0], [1, 1, 1], [0, 1, 3]]):
    B = IntSymMatrix(rows)
    tr = reduce_trace(B)
    print(rows, invariants(B))
    print("   steps", tr.steps, "->", tr.endpoint.rows, "| replay ok:", apply_steps(B, tr.steps) == tr.endpoint)
    print("   manifold:", classify(B))

A = IntSymMatrix([[3, 1], [1, 0]])
H = IntSymMatrix([[0, 1], [1, 0]])
D = IntSymMatrix([[1, 0], [0, -1]])
print("\n[[3,1],[1,0]] is odd, so it should match diag(1,-1) and not the hyperbolic form:")
print("   congruent to diag(1,-1):", brute_force_congruent(A, D, 3))
print("   congruent to hyperbolic:", brute_force_congruent(A, H, 3))
