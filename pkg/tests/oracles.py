"""Independent reference computations for cross-checking the library.

Nothing here imports the library's linear algebra: ranks come from
fraction-free (Bareiss) elimination over the integers and brackets are
expanded directly from a dict of structure constants.
"""

from fractions import Fraction
from itertools import combinations
from math import lcm


def integer_rows(rows):
    out = []
    for r in rows:
        r = [Fraction(a) for a in r]
        m = lcm(*(a.denominator for a in r)) if r else 1
        out.append([int(a * m) for a in r])
    return out


def bareiss_rank(rows, ncols=None):
    m = integer_rows(rows)
    if not m:
        return 0
    ncols = len(m[0]) if ncols is None else ncols
    nrows = len(m)
    r, prev = 0, 1
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                num = m[i][j] * m[r][c] - m[i][c] * m[r][j]
                assert num % prev == 0
                m[i][j] = num // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == nrows:
            break
    return r


def nullity(rows, ncols):
    return ncols - bareiss_rank(rows, ncols)


def raw_constants(g):
    """{(i, j): vector} for all ordered pairs, built from the stored i<j data."""
    n = g.dim
    table = {}
    for (i, j), c in g.structure_constants:
        table[(i, j)] = list(c)
        table[(j, i)] = [-a for a in c]
    return table, n


def brute_bracket(g, x, y):
    table, n = raw_constants(g)
    out = [Fraction(0)] * n
    for i in range(n):
        for j in range(n):
            c = table.get((i, j))
            if c is None:
                continue
            for k in range(n):
                out[k] += Fraction(x[i]) * Fraction(y[j]) * c[k]
    return tuple(out)


def basis(n, i):
    return tuple(Fraction(int(k == i)) for k in range(n))


def center_dim(g):
    n = g.dim
    # column i holds ad(e_i) flattened; the center is the kernel of this map
    cols = []
    for i in range(n):
        col = []
        for j in range(n):
            col.extend(brute_bracket(g, basis(n, i), basis(n, j)))
        cols.append(col)
    rows = [list(r) for r in zip(*cols)] if cols else []
    return nullity(rows, n)


def derived_dim(g):
    n = g.dim
    vecs = [brute_bracket(g, basis(n, i), basis(n, j)) for i, j in combinations(range(n), 2)]
    return bareiss_rank(vecs, n) if vecs else 0


def derivation_dim(g):
    """dim Der(g): for each elementary matrix E_ab compute the residual
    E[e_i,e_j] - [E e_i, e_j] - [e_i, E e_j] over all i<j; the residual map
    is linear in D, so Der is the kernel of the matrix of these columns."""
    n = g.dim
    if n < 2:
        return n * n
    cols = []
    for a in range(n):
        for b in range(n):
            def apply(v):
                # E_ab v = v_b e_a
                return tuple(Fraction(v[b]) if k == a else Fraction(0) for k in range(n))
            col = []
            for i, j in combinations(range(n), 2):
                ei, ej = basis(n, i), basis(n, j)
                lhs = apply(brute_bracket(g, ei, ej))
                r1 = brute_bracket(g, apply(ei), ej)
                r2 = brute_bracket(g, ei, apply(ej))
                col.extend(l - p - q for l, p, q in zip(lhs, r1, r2))
            cols.append(col)
    rows = [list(r) for r in zip(*cols)]
    return nullity(rows, n * n)


def inner_derivation_dim(g):
    n = g.dim
    vecs = []
    for i in range(n):
        v = []
        for a in range(n):
            for b in range(n):
                v.append(brute_bracket(g, basis(n, i), basis(n, b))[a])
        vecs.append(v)
    return bareiss_rank(vecs, n * n) if vecs else 0


def jacobi_residual(g, i, j, k):
    n = g.dim
    e = [basis(n, t) for t in range(n)]
    br = lambda x, y: brute_bracket(g, x, y)
    terms = [br(br(e[i], e[j]), e[k]), br(br(e[j], e[k]), e[i]), br(br(e[k], e[i]), e[j])]
    return tuple(sum(t[c] for t in terms) for c in range(n))
