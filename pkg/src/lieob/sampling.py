"""Random rational data and automorphism sampling.

Aut(g) is an infinite group, so theorem checks run over samples drawn from
explicit generators: exponentials of nilpotent adjoints, GL(Zg) and
Hom(g0/[g0,g0], Zg) blocks of a central split, and hand-verified maps
supplied by the caller.  Samples are products of a few generators.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random
from typing import Sequence

from .algebra import LieAlgebra, center
from .linalg import LinearMap, add, scale, unit_vector, zero_vector
from .maps import (
    InvariantViolation,
    SplitData,
    exp_ad,
    has_nilpotent_ad,
    hom_block_basis,
    is_automorphism,
)


def random_rational(rng: Random, bound: int = 3, max_den: int = 3, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))
        if x or not nonzero:
            return x


def random_vector(rng: Random, n: int, **kw) -> tuple:
    return tuple(random_rational(rng, **kw) for _ in range(n))


def random_matrix(rng: Random, rows: int, cols: int, **kw) -> LinearMap:
    return LinearMap.from_rows([random_vector(rng, cols, **kw) for _ in range(rows)], cols)


def random_invertible(rng: Random, n: int, **kw) -> LinearMap:
    while True:
        m = random_matrix(rng, n, n, **kw)
        if m.is_invertible():
            return m


def nilpotent_directions(g: LieAlgebra) -> list[tuple]:
    """Basis vectors with nilpotent adjoint (central ones included)."""
    n = g.dim
    return [unit_vector(n, i) for i in range(n) if has_nilpotent_ad(g, unit_vector(n, i))]


def random_nilpotent_element(g: LieAlgebra, rng: Random) -> tuple:
    """A random sigma with nilpotent ad(sigma): central part plus a nilpotent direction.

    A random combination of nilpotent directions is tried first and kept if
    its adjoint is still nilpotent.
    """
    n = g.dim
    zpart = zero_vector(n)
    for v in center(g).basis:
        zpart = add(zpart, scale(random_rational(rng), v))
    dirs = nilpotent_directions(g)
    if not dirs:
        return zpart
    combo = zero_vector(n)
    for v in dirs:
        combo = add(combo, scale(random_rational(rng), v))
    candidate = add(zpart, combo)
    if has_nilpotent_ad(g, candidate):
        return candidate
    return add(zpart, scale(random_rational(rng, nonzero=True), rng.choice(dirs)))


def center_block_automorphism(split: SplitData, rng: Random) -> LinearMap:
    """[[A, H], [0, I]] in adapted coordinates, A in GL(Zg), H killing [g0,g0]."""
    z, c = split.center_dim, split.complement_dim
    a = random_invertible(rng, z)
    h = LinearMap.zero(z, c)
    for b in hom_block_basis(split):
        h = h + b.scaled(random_rational(rng))
    m = LinearMap.block([[a, h], [LinearMap.zero(c, z), LinearMap.identity(c)]])
    return split.from_adapted(m)


def sample_automorphisms(g: LieAlgebra, rng: Random, count: int, split: SplitData | None = None,
                         hand: Sequence[LinearMap] = (), max_length: int = 3) -> list[LinearMap]:
    """``count`` automorphisms, each a product of 1..max_length generators.

    Every sample is re-verified with :func:`is_automorphism`; a failure means
    a generator is wrong and raises :class:`InvariantViolation`.
    """
    kinds = ["inner"]
    if split is not None and split.center_dim:
        kinds.append("center")
    if hand:
        kinds.append("hand")

    def draw():
        kind = rng.choice(kinds)
        if kind == "inner":
            return exp_ad(g, random_nilpotent_element(g, rng))
        if kind == "center":
            return center_block_automorphism(split, rng)
        return rng.choice(hand)

    out = []
    for _ in range(count):
        phi = LinearMap.identity(g.dim)
        for _ in range(rng.randint(1, max_length)):
            phi = phi.compose(draw())
        check = is_automorphism(g, phi)
        if not check:
            raise InvariantViolation(f"sampled map is not an automorphism ({check.reason}, {check.pair})")
        out.append(phi)
    return out
