"""
The chromatic invariant of a small directed signed graph
========================================================

Two vertices, a positive edge, a negative introverted edge and a negative
loop.  The invariant is computed three ways and the chambers of the graph's
arrangement are listed next to their orientations.
"""

from sqsym import io
from sqsym.arrangement import chambers, verify_zaslavsky
from sqsym.chromatic import chromatic_chambers, chromatic_oracle, chromatic_theorem, theorem_terms
from sqsym.graphs import example2

g = example2()
print("edges (u, v, sign, tau_u, tau_v):", g.records())

# brute force over canonical colorings
x = chromatic_oracle(g)
print("\nX(x; t) =")
for e, coeff in x.items():
    print(f"  t^{e}: {io.render_expr(coeff)}")

# the same invariant from chambers and from signed permutations
print("\nchambers agree:", chromatic_chambers(g) == x)
print("theorem agrees:", chromatic_theorem(g) == x)

# the fundamental expansion behind the theorem
print("\nfundamental terms:")
for (e, fi), c in sorted(theorem_terms(g).items(), key=lambda t: (t[0][0], t[0][1].sort_key())):
    print(f"  {c} * t^{e} {fi}")

# chambers and acyclic orientations
print("\nchambers:")
for c in chambers(g):
    print(f"  {c.name}  regions={len(c.regions)}  asc={c.asc}  orientation={c.fingerprint()}")
print(verify_zaslavsky(g))
