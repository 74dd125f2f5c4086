from fractions import Fraction
from random import Random

import pytest

from lieob.algebra import ad, center, quotient_algebra, verify_jacobi
from lieob.builtins import abelian, aff1, get_example, heisenberg3, sl2, sum_center2_aff1, sum_center_sl2
from lieob.linalg import LinearMap, Subspace, scale, vec
from lieob.maps import (
    InvariantViolation,
    NotNilpotentError,
    aut_out_description,
    block_decompose,
    build_split,
    derivation_space,
    exp_ad,
    has_nilpotent_ad,
    induced_quotient_automorphism,
    inner_derivations,
    is_automorphism,
    is_derivation,
)
from lieob.obstruction import split_check
from lieob.sampling import random_nilpotent_element, sample_automorphisms

import oracles
from helpers import SPLIT_NAMES, all_builtins

BUILTINS = all_builtins()


# derivations ---------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_derivation_dim_matches_oracle(name):
    g = BUILTINS[name]
    ders = derivation_space(g)
    assert len(ders) == oracles.derivation_dim(g)
    for d in ders:
        assert is_derivation(g, d)


def test_derivation_examples():
    assert oracles.derivation_dim(heisenberg3()) == 6
    assert len(derivation_space(heisenberg3())) == 6
    assert len(derivation_space(sl2())) == 3
    for n in range(1, 5):
        assert len(derivation_space(abelian(n))) == n * n


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_inner_derivations(name):
    g = BUILTINS[name]
    inner = inner_derivations(g)
    assert inner.dim == g.dim - center(g).dim == oracles.inner_derivation_dim(g)
    der = Subspace.span([d.flatten() for d in derivation_space(g)], g.dim ** 2)
    assert der.contains_subspace(inner)


def test_sl2_derivations_are_inner():
    g = sl2()
    der = Subspace.span([d.flatten() for d in derivation_space(g)], 9)
    assert der == inner_derivations(g)


def test_inner_derivation_examples():
    assert inner_derivations(abelian(3)).is_zero()
    assert inner_derivations(heisenberg3()).dim == 2


# automorphisms -------------------------------------------------------------

def test_is_automorphism_examples():
    assert is_automorphism(sl2(), LinearMap.identity(3))
    assert is_automorphism(heisenberg3(), LinearMap.diagonal([2, 1, 2]))
    swap = LinearMap.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, -1]])
    assert is_automorphism(sl2(), swap)
    bad = LinearMap.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    check = is_automorphism(sl2(), bad)
    assert not check and check.pair == (0, 1)


def test_singular_map_is_not_automorphism():
    check = is_automorphism(abelian(2), LinearMap.from_rows([[1, 1], [1, 1]]))
    assert not check and check.reason == "singular"


def test_exp_ad_examples():
    assert exp_ad(heisenberg3(), vec(0, 0, 3)).is_identity()
    phi = exp_ad(heisenberg3(), vec(1, 0, 0))
    assert phi == LinearMap.from_columns([vec(1, 0, 0), vec(0, 1, 1), vec(0, 0, 1)])
    with pytest.raises(NotNilpotentError) as info:
        exp_ad(sl2(), vec(0, 0, 1))
    assert info.value.stable_power == 1 and info.value.stable_rank == 2


def test_exp_ad_central_on_split_is_identity():
    g = sum_center2_aff1()
    assert exp_ad(g, vec(2, -1, 0, 0)).is_identity()


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_exp_ad_is_automorphism_and_invertible(name, rng):
    g = BUILTINS[name]
    for _ in range(10):
        sigma = random_nilpotent_element(g, rng)
        assert has_nilpotent_ad(g, sigma)
        phi = exp_ad(g, sigma)
        assert is_automorphism(g, phi)
        assert phi.compose(exp_ad(g, scale(-1, sigma))).is_identity()


def test_exp_ad_sl2_unipotent():
    # exp ad(e): ad(e)^3 = 0, three-term sum
    phi = exp_ad(sl2(), vec(1, 0, 0))
    a = ad(sl2(), vec(1, 0, 0))
    expected = LinearMap.identity(3) + a + a.compose(a).scaled(Fraction(1, 2))
    assert phi == expected
    # f -> f + [e, f] + [e, [e, f]] / 2 = f + h - e
    assert phi.column(1) == vec(-1, 1, 1)


# block decomposition -------------------------------------------------------

def test_block_decompose_identity():
    split = split_check(sum_center2_aff1()).split
    b = block_decompose(split, LinearMap.identity(4))
    assert b.phi11.is_identity() and b.phi22.is_identity()
    assert b.phi12.is_zero() and b.phi21.is_zero()
    assert b.verdicts_hold


def test_block_decompose_rejects_non_automorphism():
    split = split_check(sum_center_sl2()).split
    with pytest.raises(ValueError):
        block_decompose(split, LinearMap.diagonal([1, 2, 2, 1]))


def test_inner_block_form():
    g = sum_center_sl2()
    split = split_check(g).split
    sigma = vec(5, 0, 2, 0)
    b = block_decompose(split, exp_ad(g, sigma))
    assert b.phi11.is_identity()
    assert b.phi12.is_zero() and b.phi21.is_zero()
    assert b.phi22 == exp_ad(split.complement_algebra, split.complement_coords(sigma))


def test_sum_center_sl2_hom_block_vanishes(rng):
    ex = get_example("sum_center_sl2")
    g = ex.build()
    split = split_check(g).split
    for phi in sample_automorphisms(g, rng, 40, split=split, hand=ex.automorphisms(rng)):
        assert block_decompose(split, phi).phi12.is_zero()


def test_reassemble_reproduces_adapted_map(rng):
    ex = get_example("sum_center2_aff1")
    g = ex.build()
    split = split_check(g).split
    for phi in sample_automorphisms(g, rng, 20, split=split, hand=ex.automorphisms(rng)):
        b = block_decompose(split, phi)
        assert split.from_adapted(b.reassemble()) == phi


def test_hom_block_is_realized():
    # Q^2 + aff(1): a -> a + z1 is an automorphism with a nonzero corner block
    g = sum_center2_aff1()
    split = split_check(g).split
    phi = LinearMap.from_columns([vec(1, 0, 0, 0), vec(0, 1, 0, 0), vec(1, 0, 1, 0), vec(0, 0, 0, 1)])
    assert is_automorphism(g, phi)
    b = block_decompose(split, phi)
    assert not b.phi12.is_zero() and b.verdicts_hold


def test_build_split_rejects_bad_complement():
    g = sum_center_sl2()
    with pytest.raises(InvariantViolation):
        build_split(g, [vec(1, 0, 0, 0)], [vec(1, 1, 0, 0), vec(0, 0, 1, 0), vec(0, 0, 0, 1)])


# induced maps on g/Zg --------------------------------------------------------

def test_induced_identity_and_heisenberg_diagonal():
    g = heisenberg3()
    assert induced_quotient_automorphism(g, LinearMap.identity(3)).is_identity()
    assert induced_quotient_automorphism(g, LinearMap.diagonal([2, 1, 2])) == LinearMap.diagonal([2, 1])


@pytest.mark.parametrize("name", sorted(set(BUILTINS) - {"abelian_1", "abelian_2", "abelian_4", "abelian_5"}))
def test_induced_properties(name):
    rng = Random(name)
    ex = get_example(name)
    g = ex.build()
    q, proj = quotient_algebra(g, center(g))
    autos = sample_automorphisms(g, rng, 15, hand=ex.automorphisms(rng))
    for phi in autos:
        z = center(g)
        assert z.image(phi) == z
        ind = induced_quotient_automorphism(g, phi)
        assert is_automorphism(q, ind)
        assert ind.compose(proj) == proj.compose(phi)
    for phi, psi in zip(autos, autos[1:]):
        lhs = induced_quotient_automorphism(g, phi.compose(psi))
        rhs = induced_quotient_automorphism(g, phi).compose(induced_quotient_automorphism(g, psi))
        assert lhs == rhs
    for _ in range(5):
        sigma = random_nilpotent_element(g, rng)
        assert induced_quotient_automorphism(g, exp_ad(g, sigma)) == exp_ad(q, proj.apply(sigma))


# Aut/Inn description ---------------------------------------------------------

def test_aut_out_examples():
    d = aut_out_description(split_check(sum_center_sl2()).split)
    assert (d.dim_gl_center, d.dim_hom_block, d.derived_codim_in_g0) == (1, 0, 0)
    d = aut_out_description(split_check(sum_center2_aff1()).split)
    assert (d.dim_gl_center, d.dim_hom_block, d.derived_codim_in_g0) == (4, 2, 1)
    d = aut_out_description(split_check(aff1()).split)
    assert (d.dim_center, d.dim_gl_center, d.dim_hom_block) == (0, 0, 0)
    assert d.blocks == ("GL(Zg)", "Hom(g0/[g0,g0], Zg)", "Aut(g0)/Inn(g0)")


@pytest.mark.parametrize("name", SPLIT_NAMES)
def test_split_builtins_have_valid_splits(name):
    g = get_example(name).build()
    s = split_check(g).split
    assert verify_jacobi(s.complement_algebra).ok
    assert center(s.complement_algebra).is_zero()
