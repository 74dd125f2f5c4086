"""
Structure constants, centers and quotients
==========================================

Build a few algebras from structure constants and look at their center,
derived subalgebra and the quotient by the center.
"""

from lieob import bracket, center, derived_subalgebra, quotient_algebra, vec, verify_jacobi
from lieob.builtins import heisenberg3, sl2, sum_center_sl2

# sl(2) in the basis e, f, h: [e,f]=h, [h,e]=2e, [h,f]=-2f
g = sl2()
print("Jacobi holds:", verify_jacobi(g).ok)
print("[h + e, f] =", bracket(g, vec(1, 0, 1), vec(0, 1, 0)))   # h - 2f

# the Heisenberg algebra has a one-dimensional center equal to [g,g]
h = heisenberg3()
print("center of h3:", center(h).basis)
print("[h3,h3]:     ", derived_subalgebra(h).basis)

# quotient by the center is abelian of dimension 2
q, proj = quotient_algebra(h, center(h))
print("h3/Z:", q.dim, "dimensional, brackets:", q.structure_constants)

# Q + sl(2): the center is the first coordinate line and the quotient is sl(2)
s = sum_center_sl2()
q, proj = quotient_algebra(s, center(s))
print("(Q + sl2)/Z has the sl2 constants:", q.structure_constants == sl2().structure_constants)
