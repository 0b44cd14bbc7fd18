"""
When is the invariant signed symmetric?
=======================================

A circulant switched at one vertex gives a symmetric invariant, while an
acyclic orientation with a negative edge does not.  The color exchange that
explains the positive case is run on a few colorings.
"""

import itertools

from sqsym.algebra import is_signed_symmetric
from sqsym.chromatic import chromatic_oracle, is_invariant_symmetric, phi_involution
from sqsym.graphs import SignedGraph, acyclic_orientations, build_named, coloring_stats, is_proper

g = build_named("switched-circulant", 5, 2, 1)
x = chromatic_oracle(g)
print("nonzero t-degrees:", sorted(x.degrees()))
for e in range(len(g.edges) + 1):
    print(f"  t^{e}: terms={len(x.coeff(e)):4d} symmetric={is_signed_symmetric(x.coeff(e))}")

# switching a second vertex breaks it
two = build_named("switched-circulant", 5, 2, 1, 2)
print("\ntwo switched vertices:", is_invariant_symmetric(chromatic_oracle(two)))

# a negative edge rules symmetry out
sg = SignedGraph(2, ((1, 2, "-"), (1, 1, "-")))
print("negative edge orientations:", [is_invariant_symmetric(chromatic_oracle(o)) for o in acyclic_orientations(sg)])

# the exchange of colors 1 and 2 on the first few proper colorings
print("\nexchange 1 <-> 2:")
shown = 0
for kappa in itertools.product(range(-2, 3), repeat=5):
    if not is_proper(g, kappa) or not {1, 2, -1, -2} & set(kappa):
        continue
    out = phi_involution(g, 1, kappa)
    print(f"  {kappa} -> {out}  asc {coloring_stats(g, kappa).asc} -> {coloring_stats(g, out).asc}")
    shown += 1
    if shown == 8:
        break
