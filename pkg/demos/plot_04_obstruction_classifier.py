"""
Classifying the obstruction
===========================

The classifier reports Trivial with a reason when the fiber algebra is
centerless, abelian, or splits off its center; otherwise Undetermined with
diagnostics.  The verdict does not depend on the basis.
"""

from random import Random

from lieob import change_basis, classify_obstruction, direct_sum, reduction_report, split_check
from lieob.builtins import REGISTRY, heisenberg3, sl2
from lieob.sampling import random_invertible

for name, ex in REGISTRY.items():
    print(f"{name:18s} {classify_obstruction(ex.build())}")

# h3 + sl2: the center of h3 lies inside [g,g], so no central split exists
g = direct_sum(heisenberg3(), sl2())
v = classify_obstruction(g)
print(v, v.diagnostics)
print("witness Zg meet [g,g]:", split_check(g).obstruction_witness.basis)

# the same algebra in a random basis gets the same verdict
h = change_basis(g, random_invertible(Random(3), g.dim))
print("after basis change:", classify_obstruction(h))

# passing to g/Zg
r = reduction_report(heisenberg3())
print(r.quotient_center_dim, r.note)
