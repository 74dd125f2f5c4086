"""
Automorphisms of g = Zg + g0 in block form
==========================================

For an algebra that splits as its center plus a centerless ideal, every
automorphism is block upper triangular in adapted coordinates, and inner
automorphisms are the identity on the center.
"""

from random import Random

from lieob import aut_out_description, block_decompose, exp_ad, split_check, vec
from lieob.builtins import get_example
from lieob.sampling import sample_automorphisms

ex = get_example("sum_center2_aff1")   # Q^2 + aff(1), [a,b] = b
g = ex.build()
split = split_check(g).split
print("center basis:    ", split.center_basis)
print("complement basis:", split.complement_basis)

# sample automorphisms from inner, center-block and hand-verified generators
rng = Random(1)
autos = sample_automorphisms(g, rng, 200, split=split, hand=ex.automorphisms(rng))
blocks = [block_decompose(split, phi) for phi in autos]
print("lower-left block zero in all samples:  ", all(b.phi21_zero for b in blocks))
print("g0 block an automorphism of g0:        ", all(b.phi22_automorphism_of_g0 for b in blocks))
print("corner block kills [g0, g0]:           ", all(b.phi12_kills_derived for b in blocks))
print("corner block nonzero in some samples:  ", any(not b.phi12.is_zero() for b in blocks))

# an inner automorphism: exp ad of the nilpotent element b plus a central part
b = block_decompose(split, exp_ad(g, vec(3, -1, 0, 2)))
print("inner blocks:", b.phi11, b.phi12, b.phi21, b.phi22, sep="\n  ")

# dimensions of the blocks of Aut/Inn
print(aut_out_description(split))
