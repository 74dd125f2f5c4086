"""
Chevalley-Eilenberg cohomology tables
=====================================

Betti numbers with trivial and adjoint coefficients for the built-in
algebras.  Each row has vanishing Euler characteristic.
"""

from lieob import adjoint_module, cohomology_dim, trivial_module
from lieob.builtins import REGISTRY

for name, ex in REGISTRY.items():
    g = ex.build()
    triv = [cohomology_dim(trivial_module(g), k) for k in range(g.dim + 1)]
    adj = [cohomology_dim(adjoint_module(g), k) for k in range(g.dim + 1)]
    print(f"{name:18s} trivial {triv}   adjoint {adj}")

# H^3(sl2; Q) is one-dimensional, spanned by the top form
