"""Exact linear algebra over the rationals.

Everything here works on ``fractions.Fraction`` entries.  Vectors are plain
tuples, matrices are :class:`LinearMap` (immutable, row-major) and subspaces
are stored by their reduced row echelon basis so that equality of subspaces
is equality of matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def vec(*xs) -> Vector:
    return tuple(Fraction(x) for x in xs)


def as_vector(xs: Iterable) -> Vector:
    return tuple(Fraction(x) for x in xs)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def combine(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    """Return sum_i coeffs[i] * vectors[i] in an n-dimensional space."""
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


# ----------------------------------------------------------------------------
# Row reduction
# ----------------------------------------------------------------------------

def rref(rows: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form.

    Pivoting takes the first column with a nonzero entry at or below the
    current row and uses the topmost such row.  Returns ``(reduced, pivots)``
    where ``reduced`` contains only the nonzero rows.
    """
    m = [list(map(Fraction, r)) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [a / piv for a in m[r]]
        row_r = m[r]
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in m[:r]], pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of {x : A x = 0} for the matrix with the given rows.

    One basis vector per free column, with a 1 in that column.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        x = [ZERO] * ncols
        x[free] = ONE
        for row, p in zip(reduced, pivots):
            x[p] = -row[free]
        basis.append(tuple(x))
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence, ncols: int) -> Vector | None:
    """One solution of A x = b, or None if the system is inconsistent."""
    aug = [tuple(r) + (Fraction(b),) for r, b in zip(rows, rhs)]
    reduced, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return tuple(x)


# ----------------------------------------------------------------------------
# Linear maps
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearMap:
    """A rational matrix acting on column vectors: ``rows x cols``."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(f"entries do not match shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "LinearMap":
        entries = tuple(as_vector(r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "LinearMap":
        columns = [as_vector(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls(rows, len(columns), tuple(tuple(c[i] for c in columns) for i in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(n, n, tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "LinearMap":
        return cls(rows, cols, tuple(zero_vector(cols) for _ in range(rows)))

    @classmethod
    def diagonal(cls, diag: Sequence) -> "LinearMap":
        n = len(diag)
        return cls.from_rows([[diag[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["LinearMap"]]) -> "LinearMap":
        """Assemble a block matrix from a grid of maps."""
        rows = []
        for brow in blocks:
            for i in range(brow[0].rows):
                rows.append(sum((b.entries[i] for b in brow), ()))
        cols = sum(b.cols for b in blocks[0])
        return cls(len(rows), cols, tuple(rows))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "LinearMap":
        return LinearMap(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else
                         tuple(() for _ in range(self.cols)))

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} does not match {self.rows}x{self.cols} map")
        return tuple(dot(r, v) for r in self.entries)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """``self o other``."""
        if self.cols != other.rows:
            raise ValueError(f"cannot compose {self.shape} with {other.shape}")
        ocols = other.columns()
        return LinearMap(self.rows, other.cols,
                         tuple(tuple(dot(r, c) for c in ocols) for r in self.entries))

    def __matmul__(self, other):
        if isinstance(other, LinearMap):
            return self.compose(other)
        return self.apply(other)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return LinearMap(self.rows, self.cols,
                         tuple(add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return LinearMap(self.rows, self.cols,
                         tuple(sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "LinearMap":
        return self.scaled(-1)

    def scaled(self, c) -> "LinearMap":
        return LinearMap(self.rows, self.cols, tuple(scale(c, r) for r in self.entries))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == LinearMap.identity(self.rows)

    def rank(self) -> int:
        return rank(self.entries, self.cols)

    def kernel(self) -> "Subspace":
        return Subspace.span(nullspace(self.entries, self.cols), self.cols)

    def image(self) -> "Subspace":
        return Subspace.span(self.columns(), self.rows)

    def power(self, k: int) -> "LinearMap":
        if self.rows != self.cols:
            raise ValueError("power of a non-square map")
        out = LinearMap.identity(self.rows)
        for _ in range(k):
            out = out.compose(self)
        return out

    def inverse(self) -> "LinearMap":
        n = self.rows
        if n != self.cols:
            raise ValueError(f"cannot invert a {self.rows}x{self.cols} map")
        aug = [r + unit_vector(n, i) for i, r in enumerate(self.entries)]
        reduced, pivots = rref(aug, 2 * n)
        if pivots[:n] != list(range(n)) or len(reduced) < n:
            raise ValueError("map is singular")
        return LinearMap(n, n, tuple(row[n:] for row in reduced))

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "LinearMap":
        return LinearMap(len(row_idx), len(col_idx),
                         tuple(tuple(self.entries[i][j] for j in col_idx) for i in row_idx))

    def flatten(self) -> Vector:
        """Row-major coordinates, entry (a, b) at index a * cols + b."""
        return sum(self.entries, ())

    @classmethod
    def unflatten(cls, v: Sequence, rows: int, cols: int) -> "LinearMap":
        v = as_vector(v)
        return cls(rows, cols, tuple(v[i * cols:(i + 1) * cols] for i in range(rows)))

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in r) for r in self.entries)
        return f"LinearMap({self.rows}x{self.cols}: [{body}])"


# ----------------------------------------------------------------------------
# Subspaces
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim given by its reduced row echelon basis."""

    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vectors = [as_vector(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        reduced, _ = rref(vectors, ambient_dim)
        return cls(ambient_dim, tuple(reduced))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(unit_vector(ambient_dim, i) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(i for i, a in enumerate(r) if a) for r in self.basis]

    def is_zero(self) -> bool:
        return not self.basis

    def contains(self, v: Sequence) -> bool:
        v = list(as_vector(v))
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return not any(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def intersection(self, other: "Subspace") -> "Subspace":
        """Solve sum a_i u_i = sum b_j w_j and read off the common vectors."""
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient_dim)
        gens = list(self.basis) + [scale(-1, w) for w in other.basis]
        # columns of the system are the generators
        system = [tuple(g[k] for g in gens) for k in range(self.ambient_dim)]
        sols = nullspace(system, len(gens))
        d = self.dim
        vecs = [combine(s[:d], self.basis, self.ambient_dim) for s in sols]
        return Subspace.span(vecs, self.ambient_dim)

    def image(self, f: LinearMap) -> "Subspace":
        return Subspace.span([f.apply(v) for v in self.basis], f.rows)

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}")

    def __repr__(self):
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim})"
