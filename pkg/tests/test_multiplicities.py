"""Root and weight multiplicities, with an independent character-formula oracle.

The oracle expands the Weyl character formula directly: for finite type,
mult(mu) = sum over the Weyl group of sign(w) * K(w(lam+rho) - (mu+rho)),
where K is the Kostant partition function over the positive roots.  It shares
no code with the Freudenthal recursion under test.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product

import pytest

from coulombkit.cartan import KMWeight, langlands_dual, named_gcm, root_coordinates
from coulombkit.errors import DomainError, UnsupportedError
from coulombkit.multiplicities import (
    antidominant_conjugate,
    root_multiplicities,
    tensor_decompose,
    tensor_fixed_components,
    tensor_weight_mult,
    weight_multiplicity,
    weight_support,
)

RHO_CACHE = {}


def weyl_orbit_with_signs(gcm, lam_rho):
    """BFS orbit of a regular dominant weight; sign = (-1)^(reflection depth)."""
    seen = {lam_rho.fund: 1}
    frontier = [(lam_rho, 1)]
    while frontier:
        nxt = []
        for mu, sign in frontier:
            for i in range(gcm.size):
                nu = gcm.reflect(i, mu)
                if nu.fund not in seen:
                    seen[nu.fund] = -sign
                    nxt.append((nu, -sign))
        frontier = nxt
    return seen


def positive_roots(gcm):
    table = root_multiplicities(gcm, 12)
    roots = table.roots()
    assert all(m == 1 for m in table.multiplicities.values())
    return roots


def kostant_partition(roots, target):
    """Number of ways to write target (root coords) over the given roots."""

    @lru_cache(maxsize=None)
    def count(idx, remaining):
        if all(x == 0 for x in remaining):
            return 1
        if idx == len(roots):
            return 0
        total = 0
        vec = remaining
        while all(x >= 0 for x in vec):
            total += count(idx + 1, vec)
            vec = tuple(a - b for a, b in zip(vec, roots[idx]))
        return total

    return count(0, tuple(target))


def oracle_multiplicity(gcm, lam, mu):
    rho = KMWeight.of((1,) * gcm.size)
    roots = positive_roots(gcm)
    orbit = weyl_orbit_with_signs(gcm, lam + rho)
    total = 0
    for fund, sign in orbit.items():
        diff = KMWeight.of(fund) - (mu + rho)
        rc = root_coordinates(gcm, diff)
        if rc is None or any(x.denominator != 1 or x < 0 for x in rc):
            continue
        total += sign * kostant_partition(roots, tuple(int(x) for x in rc))
    return total


def test_root_table_a2():
    table = root_multiplicities(named_gcm("A2"), 3)
    assert table.multiplicities == {(1, 0): 1, (0, 1): 1, (1, 1): 1}


def test_root_table_height_one():
    for name in ("A1", "B2", "G2", "A1~"):
        table = root_multiplicities(named_gcm(name), 1)
        n = table.gcm.size
        assert set(table.multiplicities) == {
            tuple(1 if j == i else 0 for j in range(n)) for i in range(n)
        }


def test_root_table_finite_counts():
    # number of positive roots: A2 -> 3, B2 -> 4, G2 -> 6
    for name, count in (("A2", 3), ("B2", 4), ("G2", 6)):
        table = root_multiplicities(named_gcm(name), 10)
        assert len(table.multiplicities) == count


def test_affine_a1_imaginary_root_multiplicities():
    aff = named_gcm("A1~")
    table = root_multiplicities(aff, 6)
    # delta = alpha_0 + alpha_1; imaginary multiplicities equal the finite rank
    assert table.multiplicities[(1, 1)] == 1
    assert table.multiplicities[(2, 2)] == 1
    assert table.multiplicities[(3, 3)] == 1
    # real roots all multiplicity 1
    assert table.multiplicities[(2, 1)] == 1
    assert table.multiplicities[(1, 2)] == 1


def test_weight_multiplicity_highest_weight():
    gcm = named_gcm("A2")
    lam = KMWeight.of((2, 1))
    assert weight_multiplicity(gcm, lam, lam) == 1


def test_weight_multiplicity_adjoint_zero_weight():
    gcm = named_gcm("A2")
    assert weight_multiplicity(gcm, KMWeight.of((1, 1)), KMWeight.of((0, 0))) == 2


def test_weight_multiplicity_requires_dominant():
    gcm = named_gcm("A2")
    with pytest.raises(DomainError):
        weight_multiplicity(gcm, KMWeight.of((-1, 0)), KMWeight.of((0, 0)))


def test_basic_representation_partition_numbers():
    # affine A1, lam = Lambda_0: mult(lam - n*delta) = p(n)
    aff = named_gcm("A1~")
    lam = KMWeight.of((1, 0))
    delta = aff.root_combination(aff.null_vector)
    partitions = [1, 1, 2, 3, 5, 7]
    for n, p in enumerate(partitions):
        assert weight_multiplicity(aff, lam, lam - delta.scaled(n)) == p


def test_freudenthal_weyl_invariance():
    gcm = named_gcm("B2")
    lam = KMWeight.of((1, 1))
    for mu, m in weight_support(gcm, lam):
        for i in range(gcm.size):
            assert weight_multiplicity(gcm, lam, gcm.reflect(i, mu)) == m


def test_freudenthal_matches_character_oracle_spot():
    gcm = named_gcm("A2")
    lam = KMWeight.of((2, 2))
    for mu, m in weight_support(gcm, lam):
        assert oracle_multiplicity(gcm, lam, mu) == m


def test_weight_support_depth_required_for_affine():
    aff = named_gcm("A1~")
    with pytest.raises(DomainError):
        weight_support(aff, KMWeight.of((1, 0)))


def test_antidominant_conjugate():
    gcm = named_gcm("A2")
    anti = antidominant_conjugate(gcm, KMWeight.of((1, 1)))
    assert anti.fund == (-1, -1)
    with pytest.raises(UnsupportedError):
        antidominant_conjugate(named_gcm("A1~"), KMWeight.of((1, 0)))


def test_tensor_weight_mult_examples():
    a1 = named_gcm("A1")
    w = KMWeight.of((1,))
    assert tensor_weight_mult(a1, w, w, w + w) == 1
    assert tensor_weight_mult(a1, w, w, KMWeight.of((0,))) == 2
    a2 = named_gcm("A2")
    assert tensor_weight_mult(a2, KMWeight.of((1, 0)), KMWeight.of((0, 1)), KMWeight.of((0, 0))) == 3


def test_tensor_weight_mult_symmetry():
    a2 = named_gcm("A2")
    lam1, lam2 = KMWeight.of((2, 0)), KMWeight.of((0, 1))
    for mu, _ in weight_support(a2, lam1 + lam2):
        assert tensor_weight_mult(a2, lam1, lam2, mu) == tensor_weight_mult(a2, lam2, lam1, mu)


def test_tensor_decompose_examples():
    a1 = named_gcm("A1")
    w = KMWeight.of((1,))
    assert tensor_decompose(a1, w, w) == {KMWeight.of((2,)): 1, KMWeight.of((0,)): 1}
    assert tensor_decompose(a1, w, KMWeight.of((0,))) == {w: 1}
    a2 = named_gcm("A2")
    assert tensor_decompose(a2, KMWeight.of((1, 0)), KMWeight.of((0, 1))) == {
        KMWeight.of((1, 1)): 1,
        KMWeight.of((0, 0)): 1,
    }


def test_tensor_decompose_consistent_with_weight_mult():
    gcm = named_gcm("B2")
    lam1, lam2 = KMWeight.of((1, 0)), KMWeight.of((0, 1))
    comps = tensor_decompose(gcm, lam1, lam2)
    for mu, _ in weight_support(gcm, lam1 + lam2):
        expected = sum(m * weight_multiplicity(gcm, nu, mu) for nu, m in comps.items())
        assert expected == tensor_weight_mult(gcm, lam1, lam2, mu)


def test_tensor_decompose_requires_finite():
    with pytest.raises(UnsupportedError):
        tensor_decompose(named_gcm("A1~"), KMWeight.of((1, 0)), KMWeight.of((1, 0)))


def test_tensor_fixed_components_a1():
    a1 = named_gcm("A1")
    w = KMWeight.of((1,))
    zero = KMWeight.of((0,))
    pairs = tensor_fixed_components(a1, w, w, zero)
    assert pairs == [(KMWeight.of((-1,)), w), (w, KMWeight.of((-1,)))]
    assert tensor_fixed_components(a1, w, w, w + w) == [(w, w)]
    assert tensor_fixed_components(a1, w, w, KMWeight.of((3,))) == []
