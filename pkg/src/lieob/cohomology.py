"""Chevalley-Eilenberg cochains of a Lie algebra with values in a module.

Cochain basis in degree k: strictly increasing multi-indices I of length k in
lexicographic order, tensored with the module basis, module index fastest.
Coordinate ``idx(I) * module_dim + v`` is the v-th component of omega(e_I).

Differential, for x_0, ..., x_k:

    d omega(x_0..x_k) = sum_i (-1)^i rho(x_i) omega(..^x_i..)
                      + sum_{i<j} (-1)^(i+j) omega([x_i, x_j], ..^x_i..^x_j..)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence

from .algebra import DimensionError, LieAlgebra, ad
from .linalg import LinearMap, as_vector, unit_vector


@dataclass(frozen=True)
class LieModule:
    """A representation of ``algebra`` on Q^module_dim.

    ``action[i]`` is the matrix of e_i.  The representation property is
    checked on construction.
    """

    algebra: LieAlgebra
    module_dim: int
    action: tuple

    def __post_init__(self):
        g = self.algebra
        if len(self.action) != g.dim:
            raise DimensionError(f"{len(self.action)} action matrices for a {g.dim}-dimensional algebra")
        for a in self.action:
            if a.shape != (self.module_dim, self.module_dim):
                raise DimensionError(f"action matrix has shape {a.shape}, module dimension is {self.module_dim}")
        for i, j in combinations(range(g.dim), 2):
            lhs = self.act(g.basis_bracket(i, j))
            ai, aj = self.action[i], self.action[j]
            if lhs != ai.compose(aj) - aj.compose(ai):
                raise ValueError(f"action is not a representation: fails on basis pair ({i}, {j})")

    def act(self, x: Sequence) -> LinearMap:
        out = LinearMap.zero(self.module_dim, self.module_dim)
        for c, a in zip(x, self.action):
            if c:
                out = out + a.scaled(c)
        return out


def trivial_module(g: LieAlgebra, dim: int = 1) -> LieModule:
    return LieModule(g, dim, tuple(LinearMap.zero(dim, dim) for _ in range(g.dim)))


def adjoint_module(g: LieAlgebra) -> LieModule:
    return LieModule(g, g.dim, tuple(ad(g, unit_vector(g.dim, i)) for i in range(g.dim)))


def cochain_dim(m: LieModule, k: int) -> int:
    n = m.algebra.dim
    if k < 0 or k > n:
        return 0
    return comb(n, k) * m.module_dim


def _check_degree(m: LieModule, k: int):
    n = m.algebra.dim
    if k < 0 or k > n:
        raise ValueError(f"degree {k} outside 0..{n}")


def _sorted_sign(indices: list[int]):
    """Sort a list of distinct indices; return (sorted tuple, sign) or (None, 0) on repeats."""
    if len(set(indices)) != len(indices):
        return None, 0
    sign = 1
    arr = list(indices)
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return tuple(arr), sign


@lru_cache(maxsize=256)
def ce_differential(m: LieModule, k: int) -> LinearMap:
    """Matrix of d: C^k -> C^(k+1)."""
    _check_degree(m, k)
    g = m.algebra
    n, md = g.dim, m.module_dim
    src = list(combinations(range(n), k))
    dst = list(combinations(range(n), k + 1))
    src_index = {idx: r for r, idx in enumerate(src)}
    rows = [[Fraction(0)] * (len(src) * md) for _ in range(len(dst) * md)]
    action = [a.entries for a in m.action]
    for t, J in enumerate(dst):
        base_row = t * md
        # action term
        for i, xi in enumerate(J):
            rest = J[:i] + J[i + 1:]
            s = src_index[rest] * md
            sign = 1 if i % 2 == 0 else -1
            act = action[xi]
            for w in range(md):
                row = rows[base_row + w]
                for v in range(md):
                    a = act[w][v]
                    if a:
                        row[s + v] += sign * a
        # bracket term
        for i, j in combinations(range(k + 1), 2):
            c = g.basis_bracket(J[i], J[j])
            rest = J[:i] + J[i + 1:j] + J[j + 1:]
            sign = 1 if (i + j) % 2 == 0 else -1
            for mm, cm in enumerate(c):
                if not cm:
                    continue
                key, s2 = _sorted_sign([mm, *rest])
                if key is None:
                    continue
                s = src_index[key] * md
                coeff = sign * s2 * cm
                for w in range(md):
                    rows[base_row + w][s + w] += coeff
    return LinearMap(len(dst) * md, len(src) * md, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class CochainComplexSlice:
    degree: int
    cochain_dim: int
    differential_out: LinearMap


def complex_slice(m: LieModule, k: int) -> CochainComplexSlice:
    return CochainComplexSlice(k, cochain_dim(m, k), ce_differential(m, k))


def cohomology_dim(m: LieModule, k: int) -> int:
    _check_degree(m, k)
    dk = ce_differential(m, k)
    kernel = dk.cols - dk.rank()
    image = ce_differential(m, k - 1).rank() if k > 0 else 0
    return kernel - image


def is_closed(m: LieModule, k: int, cochain: Sequence) -> bool:
    _check_degree(m, k)
    cochain = as_vector(cochain)
    if len(cochain) != cochain_dim(m, k):
        raise DimensionError(f"cochain has length {len(cochain)}, degree {k} cochains have {cochain_dim(m, k)}")
    return not any(ce_differential(m, k).apply(cochain))


def euler_characteristic(m: LieModule) -> int:
    return sum((-1) ** k * cohomology_dim(m, k) for k in range(m.algebra.dim + 1))
