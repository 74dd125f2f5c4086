"""Finite-dimensional Lie algebras over Q given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .linalg import (
    LinearMap,
    Subspace,
    Vector,
    ZERO,
    add,
    as_vector,
    is_zero_vector,
    nullspace,
    solve,
    unit_vector,
    zero_vector,
)

MAX_DIM = 32


class DimensionError(ValueError):
    pass


class NotAnIdealError(ValueError):
    """Raised by :func:`quotient_algebra`; ``witness`` is ``(v, i)`` with
    ``[v, e_i]`` outside the proposed ideal."""

    def __init__(self, witness):
        v, i = witness
        super().__init__(f"not an ideal: bracket of {tuple(str(a) for a in v)} with e{i} escapes")
        self.witness = witness


@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants ``[e_i, e_j] = sum_k c[(i, j)][k] e_k`` for i < j.

    Only nonzero brackets with ``i < j`` are stored; the rest follows from
    antisymmetry.
    """

    dim: int
    structure_constants: tuple  # sorted ((i, j), coeff_vector) pairs
    basis_names: tuple
    _table: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = self.dim
        if n < 0 or n > MAX_DIM:
            raise DimensionError(f"dimension {n} outside supported range 0..{MAX_DIM}")
        if len(self.basis_names) != n:
            raise DimensionError(f"{len(self.basis_names)} basis names for dimension {n}")
        zero = zero_vector(n)
        table = [[zero] * n for _ in range(n)]
        for (i, j), c in self.structure_constants:
            if not (0 <= i < j < n):
                raise IndexError(f"structure constant key ({i}, {j}) must satisfy 0 <= i < j < {n}")
            if len(c) != n:
                raise DimensionError(f"bracket [e{i}, e{j}] has {len(c)} coordinates, expected {n}")
            table[i][j] = c
            table[j][i] = tuple(-a for a in c)
        object.__setattr__(self, "_table", tuple(tuple(r) for r in table))

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping, basis_names: Sequence[str] | None = None):
        """Build from ``{(i, j): vector or {k: coeff}}``.

        Keys with ``i > j`` are accepted and flipped with a sign change.
        """
        consts: dict = {}
        for (i, j), value in brackets.items():
            if isinstance(value, Mapping):
                v = [ZERO] * dim
                for k, a in value.items():
                    v[k] = Fraction(a)
                value = v
            value = as_vector(value)
            if i == j:
                if not is_zero_vector(value):
                    raise ValueError(f"[e{i}, e{i}] must vanish")
                continue
            if i > j:
                i, j, value = j, i, tuple(-a for a in value)
            if (i, j) in consts:
                raise ValueError(f"bracket ({i}, {j}) given twice")
            consts[(i, j)] = value
        if basis_names is None:
            basis_names = [f"e{k + 1}" for k in range(dim)]
        items = tuple(sorted((k, v) for k, v in consts.items() if not is_zero_vector(v)))
        return cls(dim, items, tuple(basis_names))

    @classmethod
    def abelian(cls, n: int) -> "LieAlgebra":
        return cls.from_brackets(n, {})

    def basis_bracket(self, i: int, j: int) -> Vector:
        return self._table[i][j]

    def brackets(self) -> dict:
        return dict(self.structure_constants)

    def structure_tensor(self):
        return self._table

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, names={list(self.basis_names)})"


def _check_len(g: LieAlgebra, *vs):
    for v in vs:
        if len(v) != g.dim:
            raise DimensionError(f"element has {len(v)} coordinates, algebra has dimension {g.dim}")


def bracket(g: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    _check_len(g, x, y)
    n = g.dim
    out = [ZERO] * n
    table = g.structure_tensor()
    for i, a in enumerate(x):
        if not a:
            continue
        row = table[i]
        for j, b in enumerate(y):
            if not b or i == j:
                continue
            c = row[j]
            ab = a * b
            for k, ck in enumerate(c):
                if ck:
                    out[k] += ab * ck
    return tuple(out)


@dataclass(frozen=True)
class JacobiReport:
    """Result of :func:`verify_jacobi`.  Truthy iff there are no violations.

    ``violations`` holds ``((i, j, k), residual)`` with 0-based indices.
    """

    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def verify_jacobi(g: LieAlgebra) -> JacobiReport:
    n = g.dim
    e = [unit_vector(n, i) for i in range(n)]
    bad = []
    for i, j, k in combinations(range(n), 3):
        r = add(add(bracket(g, g.basis_bracket(i, j), e[k]),
                    bracket(g, g.basis_bracket(j, k), e[i])),
                bracket(g, g.basis_bracket(k, i), e[j]))
        if not is_zero_vector(r):
            bad.append(((i, j, k), r))
    return JacobiReport(tuple(bad))


def ad(g: LieAlgebra, x: Sequence) -> LinearMap:
    """Matrix of y -> [x, y]; column j is [x, e_j]."""
    _check_len(g, x)
    n = g.dim
    return LinearMap.from_columns([bracket(g, x, unit_vector(n, j)) for j in range(n)], n)


def center(g: LieAlgebra) -> Subspace:
    """Kernel of x -> ad(x).

    The unknown is x; the equations are the n*n entries of ad(x), i.e. for
    each j and k the k-th coordinate of [x, e_j].
    """
    n = g.dim
    table = g.structure_tensor()
    rows = [tuple(table[i][j][k] for i in range(n)) for j in range(n) for k in range(n)]
    return Subspace.span(nullspace(rows, n), n)


def derived_subalgebra(g: LieAlgebra) -> Subspace:
    return Subspace.span([c for _, c in g.structure_constants], g.dim)


def is_ideal(g: LieAlgebra, sub: Subspace):
    """Return ``(True, None)`` or ``(False, (v, i))`` with [v, e_i] not in sub."""
    n = g.dim
    for v in sub.basis:
        for i in range(n):
            if not sub.contains(bracket(g, v, unit_vector(n, i))):
                return False, (v, i)
    return True, None


def is_subalgebra(g: LieAlgebra, sub: Subspace) -> bool:
    return all(sub.contains(bracket(g, u, v)) for u, v in combinations(sub.basis, 2))


def quotient_projection(sub: Subspace) -> tuple[LinearMap, LinearMap]:
    """Projection onto the non-pivot coordinates of ``sub`` and its section.

    The quotient basis is the images of the standard vectors e_c for the
    non-pivot columns c.  Returns ``(projection, section)`` with
    ``projection o section = identity``.
    """
    n = sub.ambient_dim
    pivots = sub.pivots
    free = [c for c in range(n) if c not in set(pivots)]
    m = len(free)
    # x = sum_r x_{p_r} row_r + (remainder supported on free columns)
    cols = []
    for j in range(n):
        v = [ZERO] * n
        v[j] = Fraction(1)
        for row, p in zip(sub.basis, pivots):
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        cols.append(tuple(v[c] for c in free))
    projection = LinearMap.from_columns(cols, m)
    section = LinearMap.from_columns([unit_vector(n, c) for c in free], n)
    return projection, section


def quotient_algebra(g: LieAlgebra, ideal: Subspace) -> tuple[LieAlgebra, LinearMap]:
    if ideal.ambient_dim != g.dim:
        raise DimensionError(f"subspace lives in Q^{ideal.ambient_dim}, algebra has dimension {g.dim}")
    ok, witness = is_ideal(g, ideal)
    if not ok:
        raise NotAnIdealError(witness)
    proj, sect = quotient_projection(ideal)
    m = proj.rows
    lifts = sect.columns()
    brackets = {}
    for a, b in combinations(range(m), 2):
        brackets[(a, b)] = proj.apply(bracket(g, lifts[a], lifts[b]))
    free = [next(i for i, x in enumerate(col) if x) for col in lifts]
    names = [g.basis_names[c] for c in free]
    return LieAlgebra.from_brackets(m, brackets, names), proj


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    n = a.dim + b.dim
    brackets = {}
    for (i, j), c in a.structure_constants:
        brackets[(i, j)] = tuple(c) + zero_vector(b.dim)
    for (i, j), c in b.structure_constants:
        brackets[(a.dim + i, a.dim + j)] = zero_vector(a.dim) + tuple(c)
    return LieAlgebra.from_brackets(n, brackets, a.basis_names + b.basis_names)


def change_basis(g: LieAlgebra, p: LinearMap, basis_names: Sequence[str] | None = None) -> LieAlgebra:
    """Rewrite g in the basis whose i-th vector is column i of ``p``."""
    n = g.dim
    if p.shape != (n, n):
        raise DimensionError(f"basis change must be {n}x{n}, got {p.shape}")
    pinv = p.inverse()
    cols = p.columns()
    brackets = {}
    for i, j in combinations(range(n), 2):
        brackets[(i, j)] = pinv.apply(bracket(g, cols[i], cols[j]))
    if basis_names is None:
        basis_names = [f"f{k + 1}" for k in range(n)]
    return LieAlgebra.from_brackets(n, brackets, basis_names)


def subalgebra(g: LieAlgebra, sub: Subspace, basis: Sequence[Sequence] | None = None,
               names: Sequence[str] | None = None) -> tuple[LieAlgebra, LinearMap]:
    """A bracket-closed subspace as a standalone algebra.

    Returns the algebra and the inclusion map (columns are the chosen basis).
    """
    basis = [as_vector(v) for v in (basis if basis is not None else sub.basis)]
    k = len(basis)
    inc = LinearMap.from_columns(basis, g.dim)
    rows = inc.entries
    brackets = {}
    for a, b in combinations(range(k), 2):
        coords = solve(rows, bracket(g, basis[a], basis[b]), k)
        if coords is None:
            raise ValueError("subspace is not closed under the bracket")
        brackets[(a, b)] = coords
    return LieAlgebra.from_brackets(k, brackets, names), inc
