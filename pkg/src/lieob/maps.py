"""Derivations, automorphisms and the block structure of Aut(g) for g = Zg + g0."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Sequence

from .algebra import (
    DimensionError,
    LieAlgebra,
    ad,
    bracket,
    center,
    derived_subalgebra,
    is_ideal,
    is_subalgebra,
    quotient_algebra,
    quotient_projection,
    subalgebra,
)
from .linalg import LinearMap, Subspace, as_vector, nullspace, unit_vector


class NotNilpotentError(ValueError):
    """ad(sigma) is not nilpotent.

    ``stable_power`` is the smallest k with rank ad^k = rank ad^(k+1) > 0,
    i.e. where the power sequence stops shrinking without reaching zero.
    """

    def __init__(self, stable_power: int, stable_rank: int):
        super().__init__(
            f"ad(sigma) is not nilpotent: rank of ad^k stabilizes at {stable_rank} from k = {stable_power}"
        )
        self.stable_power = stable_power
        self.stable_rank = stable_rank


class InvariantViolation(RuntimeError):
    """A mathematical invariant that must hold failed; indicates a bug."""


# ----------------------------------------------------------------------------
# Derivations
# ----------------------------------------------------------------------------

def derivation_constraints(g: LieAlgebra) -> list[tuple]:
    """Rows of the linear system D[e_i,e_j] = [De_i,e_j] + [e_i,De_j].

    Unknowns are the entries D[a][b] flattened row-major (index a*n + b);
    De_i is column i of D.  One row per pair i < j and output coordinate k.
    """
    n = g.dim
    c = g.structure_tensor()
    rows = []
    for i, j in combinations(range(n), 2):
        cij = c[i][j]
        for k in range(n):
            row = [Fraction(0)] * (n * n)
            for m in range(n):
                if cij[m]:
                    row[k * n + m] += cij[m]
            for a in range(n):
                # [D e_i, e_j]_k = sum_a D[a][i] c[a][j][k]
                if c[a][j][k]:
                    row[a * n + i] -= c[a][j][k]
                # [e_i, D e_j]_k = sum_a D[a][j] c[i][a][k]
                if c[i][a][k]:
                    row[a * n + j] -= c[i][a][k]
            rows.append(tuple(row))
    return rows


def derivation_space(g: LieAlgebra) -> list[LinearMap]:
    n = g.dim
    sols = nullspace(derivation_constraints(g), n * n)
    return [LinearMap.unflatten(s, n, n) for s in sols]


def is_derivation(g: LieAlgebra, d: LinearMap) -> bool:
    n = g.dim
    e = [unit_vector(n, i) for i in range(n)]
    cols = d.columns()
    for i, j in combinations(range(n), 2):
        lhs = d.apply(g.basis_bracket(i, j))
        rhs = tuple(a + b for a, b in zip(bracket(g, cols[i], e[j]), bracket(g, e[i], cols[j])))
        if lhs != rhs:
            return False
    return True


def inner_derivations(g: LieAlgebra) -> Subspace:
    n = g.dim
    return Subspace.span([ad(g, unit_vector(n, i)).flatten() for i in range(n)], n * n)


# ----------------------------------------------------------------------------
# Automorphisms
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class AutomorphismCheck:
    """Truthy iff the map is an automorphism.

    On failure ``pair`` is the first basis pair (i, j) with
    phi[e_i, e_j] != [phi e_i, phi e_j], or None when phi is singular.
    """

    ok: bool
    pair: tuple | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def is_automorphism(g: LieAlgebra, phi: LinearMap) -> AutomorphismCheck:
    n = g.dim
    if phi.shape != (n, n):
        raise DimensionError(f"expected a {n}x{n} map, got {phi.rows}x{phi.cols}")
    if not phi.is_invertible():
        return AutomorphismCheck(False, None, "singular")
    cols = phi.columns()
    for i, j in combinations(range(n), 2):
        if phi.apply(g.basis_bracket(i, j)) != bracket(g, cols[i], cols[j]):
            return AutomorphismCheck(False, (i, j), "bracket not preserved")
    return AutomorphismCheck(True)


def nilpotency_index(m: LinearMap) -> int | None:
    """Smallest k with m^k = 0, or None if m is not nilpotent."""
    n = m.rows
    p = LinearMap.identity(n)
    for k in range(1, n + 1):
        p = p.compose(m)
        if p.is_zero():
            return k
    return None if n else 0


def exp_nilpotent(m: LinearMap) -> LinearMap:
    """sum_k m^k / k!  for nilpotent m (finite, exact)."""
    k = nilpotency_index(m)
    if k is None:
        raise ValueError("matrix is not nilpotent")
    out = LinearMap.identity(m.rows)
    p = LinearMap.identity(m.rows)
    for i in range(1, k):
        p = p.compose(m)
        out = out + p.scaled(Fraction(1, factorial(i)))
    return out


def exp_ad(g: LieAlgebra, sigma: Sequence) -> LinearMap:
    a = ad(g, as_vector(sigma))
    if nilpotency_index(a) is None:
        ranks = [a.power(k).rank() for k in range(1, g.dim + 2)]
        k = next(k for k in range(1, g.dim + 1) if ranks[k - 1] == ranks[k])
        raise NotNilpotentError(k, ranks[k - 1])
    return exp_nilpotent(a)


def has_nilpotent_ad(g: LieAlgebra, sigma: Sequence) -> bool:
    return nilpotency_index(ad(g, as_vector(sigma))) is not None


# ----------------------------------------------------------------------------
# Central splittings and the block decomposition
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class SplitData:
    """g = Zg + g0 with g0 an ideal with zero center.

    ``change_of_basis`` maps standard coordinates to adapted ones: the first
    ``dim Zg`` adapted coordinates are along ``center_basis``, the rest along
    ``complement_basis``.  ``complement_algebra`` is g0 written in
    ``complement_basis``.
    """

    algebra: LieAlgebra
    center_part: Subspace
    complement_part: Subspace
    center_basis: tuple
    complement_basis: tuple
    change_of_basis: LinearMap
    complement_algebra: LieAlgebra

    @property
    def center_dim(self) -> int:
        return len(self.center_basis)

    @property
    def complement_dim(self) -> int:
        return len(self.complement_basis)

    @property
    def adapted_basis(self) -> LinearMap:
        """Inverse of ``change_of_basis``: adapted coordinates -> standard."""
        return LinearMap.from_columns(self.center_basis + self.complement_basis, self.algebra.dim)

    def to_adapted(self, phi: LinearMap) -> LinearMap:
        return self.change_of_basis.compose(phi).compose(self.adapted_basis)

    def from_adapted(self, m: LinearMap) -> LinearMap:
        return self.adapted_basis.compose(m).compose(self.change_of_basis)

    def complement_coords(self, x: Sequence) -> tuple:
        """g0-coordinates of the g0-component of x."""
        return self.change_of_basis.apply(as_vector(x))[self.center_dim:]

    def center_coords(self, x: Sequence) -> tuple:
        return self.change_of_basis.apply(as_vector(x))[:self.center_dim]


def build_split(g: LieAlgebra, center_basis: Sequence[Sequence], complement_basis: Sequence[Sequence]) -> SplitData:
    """Assemble SplitData and check every invariant, raising on failure."""
    n = g.dim
    zb = tuple(as_vector(v) for v in center_basis)
    cb = tuple(as_vector(v) for v in complement_basis)
    zg = Subspace.span(zb, n)
    g0 = Subspace.span(cb, n)
    if zg != center(g):
        raise InvariantViolation("center part is not the center of the algebra")
    if zg.dim + g0.dim != n or (zg + g0).dim != n:
        raise InvariantViolation("center part and complement do not form a direct sum")
    if not is_subalgebra(g, g0) or not is_ideal(g, g0)[0]:
        raise InvariantViolation("complement is not an ideal")
    g0_alg, _ = subalgebra(g, g0, cb, _names(g, cb))
    if center(g0_alg).dim != 0:
        raise InvariantViolation("complement has nonzero center")
    basis = LinearMap.from_columns(zb + cb, n)
    return SplitData(g, zg, g0, zb, cb, basis.inverse(), g0_alg)


def _names(g: LieAlgebra, vectors) -> list[str]:
    names = []
    for k, v in enumerate(vectors):
        support = [i for i, a in enumerate(v) if a]
        if len(support) == 1 and v[support[0]] == 1:
            names.append(g.basis_names[support[0]])
        else:
            names.append(f"u{k + 1}")
    return names


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks of phi in adapted coordinates (Zg first, then g0).

    phi11: Zg -> Zg, phi12: g0 -> Zg, phi21: Zg -> g0, phi22: g0 -> g0.
    """

    phi11: LinearMap
    phi12: LinearMap
    phi21: LinearMap
    phi22: LinearMap
    phi21_zero: bool
    phi22_automorphism_of_g0: bool
    phi12_kills_derived: bool

    @property
    def verdicts_hold(self) -> bool:
        return self.phi21_zero and self.phi22_automorphism_of_g0 and self.phi12_kills_derived

    def reassemble(self) -> LinearMap:
        return LinearMap.block([[self.phi11, self.phi12], [self.phi21, self.phi22]])


def split_blocks(split: SplitData, m: LinearMap):
    z = split.center_dim
    n = split.algebra.dim
    zi, ci = range(z), range(z, n)
    return (m.submatrix(zi, zi), m.submatrix(zi, ci), m.submatrix(ci, zi), m.submatrix(ci, ci))


def block_decompose(split: SplitData, phi: LinearMap) -> BlockDecomposition:
    g = split.algebra
    check = is_automorphism(g, phi)
    if not check:
        raise ValueError(f"not an automorphism ({check.reason}, pair {check.pair})")
    p11, p12, p21, p22 = split_blocks(split, split.to_adapted(phi))
    g0 = split.complement_algebra
    derived = derived_subalgebra(g0)
    kills = all(not any(p12.apply(v)) for v in derived.basis)
    return BlockDecomposition(p11, p12, p21, p22,
                              phi21_zero=p21.is_zero(),
                              phi22_automorphism_of_g0=bool(is_automorphism(g0, p22)),
                              phi12_kills_derived=kills)


def induced_quotient_automorphism(g: LieAlgebra, phi: LinearMap) -> LinearMap:
    """The map phi induces on g/Zg, in the quotient basis of quotient_algebra."""
    check = is_automorphism(g, phi)
    if not check:
        raise ValueError(f"not an automorphism ({check.reason}, pair {check.pair})")
    z = center(g)
    if z.image(phi) != z:
        raise InvariantViolation("automorphism does not preserve the center")
    proj, sect = quotient_projection(z)
    return proj.compose(phi).compose(sect)


def quotient_by_center(g: LieAlgebra):
    return quotient_algebra(g, center(g))


@dataclass(frozen=True)
class AutOutReport:
    dim_center: int
    dim_complement: int
    dim_gl_center: int
    dim_hom_block: int
    derived_codim_in_g0: int
    blocks: tuple = ("GL(Zg)", "Hom(g0/[g0,g0], Zg)", "Aut(g0)/Inn(g0)")


def aut_out_description(split: SplitData) -> AutOutReport:
    """Dimensions of the blocks of Aut(g)/Inn(g) = [[GL(Zg), Hom(g0/[g0,g0], Zg)], [0, Out(g0)]].

    The corner block is read with values in Zg (not Z(g0), which is zero).
    """
    z = split.center_dim
    g0 = split.complement_algebra
    codim = g0.dim - derived_subalgebra(g0).dim
    return AutOutReport(z, g0.dim, z * z, codim * z, codim)


def hom_block_basis(split: SplitData) -> list[LinearMap]:
    """Basis of Hom(g0/[g0,g0], Zg) as z x dim(g0) matrices in adapted coordinates."""
    g0 = split.complement_algebra
    functionals = nullspace(derived_subalgebra(g0).basis, g0.dim)
    out = []
    for r in range(split.center_dim):
        for f in functionals:
            rows = [f if k == r else (Fraction(0),) * g0.dim for k in range(split.center_dim)]
            out.append(LinearMap.from_rows(rows, g0.dim))
    return out
