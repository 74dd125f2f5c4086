from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieob.linalg import LinearMap, Subspace, nullspace, rank, rref, solve, vec

import oracles

small = st.fractions(min_value=-4, max_value=4, max_denominator=4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_rref_canonical_example():
    reduced, pivots = rref([[0, 2, 4], [1, 1, 1], [1, 3, 5]])
    assert pivots == [0, 1]
    assert reduced == [vec(1, 0, -1), vec(0, 1, 2)]


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_agrees_with_bareiss(m):
    assert rank(m) == oracles.bareiss_rank(m)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_nullspace_is_kernel_of_full_size(m):
    ncols = len(m[0])
    ns = nullspace(m, ncols)
    assert len(ns) == oracles.nullity(m, ncols)
    a = LinearMap.from_rows(m)
    for v in ns:
        assert not any(a.apply(v))


@settings(max_examples=40, deadline=None)
@given(matrices(4, 4))
def test_subspace_equality_is_basis_independent(m):
    n = len(m[0])
    s = Subspace.span(m, n)
    shuffled = Subspace.span(list(reversed(m)) + [tuple(2 * a for a in m[0])], n)
    assert s == shuffled


def test_intersection_and_sum_dimensions():
    u = Subspace.span([vec(1, 0, 0), vec(0, 1, 0)], 3)
    w = Subspace.span([vec(0, 1, 0), vec(0, 0, 1)], 3)
    assert u.intersection(w) == Subspace.span([vec(0, 1, 0)], 3)
    assert (u + w) == Subspace.full(3)
    assert u.intersection(Subspace.zero(3)).is_zero()


def test_inverse_and_singular():
    a = LinearMap.from_rows([[2, 1], [1, 1]])
    assert a.compose(a.inverse()).is_identity()
    with pytest.raises(ValueError):
        LinearMap.from_rows([[1, 2], [2, 4]]).inverse()


def test_compose_dimension_mismatch():
    with pytest.raises(ValueError):
        LinearMap.identity(2).compose(LinearMap.identity(3))
    with pytest.raises(ValueError):
        LinearMap.identity(2).apply(vec(1, 2, 3))


def test_identity_is_unit():
    a = LinearMap.from_rows([[1, 2, 3], [4, 5, 6]])
    assert LinearMap.identity(2) @ a == a
    assert a @ LinearMap.identity(3) == a


def test_solve_consistent_and_not():
    assert solve([[1, 1], [1, -1]], [2, 0], 2) == vec(1, 1)
    assert solve([[1, 1], [2, 2]], [1, 3], 2) is None


def test_flatten_roundtrip():
    a = LinearMap.from_rows([[1, Fraction(1, 2)], [0, -3]])
    assert LinearMap.unflatten(a.flatten(), 2, 2) == a
