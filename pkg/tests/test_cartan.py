"""Cartan data: axioms, symmetrizers, classification, duality, dominance."""

import pytest

from coulombkit.cartan import (
    KMWeight,
    central_element_as_root_sum,
    dominance_leq,
    in_positive_root_cone,
    langlands_dual,
    level,
    named_gcm,
    root_coordinates,
    validate_and_symmetrize,
)
from coulombkit.errors import CartanError, DomainError, SymmetrizabilityError, UnsupportedError


def test_a2_symmetric():
    gcm = validate_and_symmetrize([[2, -1], [-1, 2]])
    assert gcm.d == (1, 1)
    assert gcm.tag == "finite"


def test_b2_symmetrizers():
    gcm = validate_and_symmetrize([[2, -2], [-1, 2]])
    assert gcm.d == (1, 2)
    assert gcm.tag == "finite"
    # d_i a_ij = d_j a_ji
    for i in range(2):
        for j in range(2):
            assert gcm.d[i] * gcm.entries[i][j] == gcm.d[j] * gcm.entries[j][i]


def test_nonsymmetrizable_cycle():
    with pytest.raises(SymmetrizabilityError):
        validate_and_symmetrize([[2, -1, -1], [-1, 2, -1], [-2, -1, 2]])


def test_axiom_violations():
    with pytest.raises(CartanError):
        validate_and_symmetrize([[1, 0], [0, 2]])
    with pytest.raises(CartanError):
        validate_and_symmetrize([[2, 1], [1, 2]])
    with pytest.raises(CartanError):
        validate_and_symmetrize([[2, 0], [-1, 2]])


def test_classification_tags():
    assert named_gcm("A3").tag == "finite"
    assert named_gcm("G2").tag == "finite"
    assert named_gcm("A1~").tag == "affine"
    assert named_gcm("A2~").tag == "affine"
    assert validate_and_symmetrize([[2, -3], [-3, 2]]).tag == "indefinite"


def test_langlands_dual_transpose_and_involution():
    b2 = named_gcm("B2")
    c2 = langlands_dual(b2)
    assert c2.entries == ((2, -1), (-2, 2))
    assert langlands_dual(c2).entries == b2.entries
    a2 = named_gcm("A2")
    assert langlands_dual(a2).entries == a2.entries


def test_affine_data():
    aff = named_gcm("A1~")
    assert aff.null_vector == (1, 1)
    assert aff.dual_labels == (1, 1)
    # s . a = 1
    assert sum(s * a for s, a in zip(aff.delta_split, aff.null_vector)) == 1
    # A . a = 0
    for row in aff.entries:
        assert sum(x * a for x, a in zip(row, aff.null_vector)) == 0


def test_affine_delta_is_root_combination_of_null_vector():
    aff = named_gcm("A1~")
    delta = aff.root_combination(aff.null_vector)
    assert delta.fund == (0, 0) and delta.delta == 1


def test_level_examples():
    aff = named_gcm("A1~")
    lam0 = KMWeight.of((1, 0))
    assert level(aff, lam0) == 1
    assert level(aff, KMWeight.of((1, 1))) == 2
    delta = aff.root_combination(aff.null_vector)
    assert level(aff, delta) == 0
    with pytest.raises(UnsupportedError):
        level(named_gcm("A2"), KMWeight.of((1, 0)))


def test_central_element():
    aff = named_gcm("A1~")
    c = central_element_as_root_sum(aff)
    assert c == aff.root_combination(aff.null_vector)


def test_dominance_a1():
    a1 = named_gcm("A1")
    two = KMWeight.of((2,))
    zero = KMWeight.of((0,))
    one = KMWeight.of((1,))
    assert dominance_leq(two, two, a1)
    assert dominance_leq(zero, two, a1)      # difference = alpha
    assert not dominance_leq(one, two, a1)   # difference not in root lattice


def test_dominance_partial_order():
    a2 = named_gcm("A2")
    rho = KMWeight.of((1, 1))
    zero = KMWeight.of((0, 0))
    theta = KMWeight.of((1, 1))
    assert dominance_leq(zero, rho, a2)
    assert not dominance_leq(rho, zero, a2)
    assert dominance_leq(theta, rho, a2) and dominance_leq(rho, theta, a2)


def test_root_coordinates_affine_pinning():
    aff = named_gcm("A1~")
    # alpha_0 + alpha_1 should come back as (1, 1) with delta coordinate resolved
    mu = aff.simple_root(0) + aff.simple_root(1)
    assert root_coordinates(aff, mu) == (1, 1)
    # delta itself
    delta = aff.root_combination(aff.null_vector)
    assert in_positive_root_cone(aff, delta) == (1, 1)
    # a weight off the root lattice
    assert root_coordinates(aff, KMWeight.of((1, 0))) is None


def test_reflect_preserves_affine_delta_pairing():
    aff = named_gcm("A1~")
    lam = KMWeight.of((2, 0), delta=0)
    for i in range(2):
        refl = aff.reflect(i, lam)
        assert level(aff, refl) == level(aff, lam)


def test_named_registry_errors():
    with pytest.raises(DomainError):
        named_gcm("E11")
