import random

import pytest

from instances import RINGS, random_complex, random_hom, random_hset
from kloci.complexes import (
    ChainComplex,
    betti_jump_locus,
    induced_complex,
    j_split_holds,
    k_betti,
    mapping_cone_of_identity,
    minors_outside_augmentation,
    validate_complex,
    verify_betti_locus,
)
from kloci.laurent import GroupRing
from kloci.lattices import GroupHom, Sublattice, box_homs
from kloci.matrank import PolyMatrix
from kloci.rings import K0, ZZ

Z1 = GroupRing(ZZ, 1)
Z2 = GroupRing(ZZ, 2)


def x_minus_one() -> ChainComplex:
    (x,) = Z1.gens()
    return ChainComplex.from_matrices(Z1, 0, [1, 1], [[[x - 1]]])


def test_validate_examples():
    assert validate_complex(x_minus_one())
    (x,) = Z1.gens()
    C = ChainComplex.from_matrices(Z1, 0, [1, 1, 1], [[[x]], [[x]]])
    assert not validate_complex(C)
    Z = ChainComplex.from_matrices(Z1, 0, [2, 1, 2], [PolyMatrix.zeros(Z1, 2, 1), PolyMatrix.zeros(Z1, 1, 2)])
    assert validate_complex(Z)


def test_shape_errors():
    (x,) = Z1.gens()
    with pytest.raises(ValueError):
        ChainComplex.from_matrices(Z1, 0, [1, 2], [[[x]]])
    with pytest.raises(ValueError):
        ChainComplex(Z1, 0, (1, 1), ())
    with pytest.raises(ValueError):
        ChainComplex(Z1, 0, (-1,), ())


def test_betti_examples():
    C = x_minus_one()
    assert k_betti(C, K0(), 0) == 0 and k_betti(C, K0(), 1) == 0
    pC = induced_complex(GroupHom.zero(1, 1), C)
    assert k_betti(pC, K0(), 0) == 1 and k_betti(pC, K0(), 1) == 1
    assert pC.differential(1).is_zero()
    Z = ChainComplex.from_matrices(Z1, 0, [0, 0], [PolyMatrix.zeros(Z1, 0, 0)])
    assert all(k_betti(Z, K0(), k) == 0 for k in range(-2, 3))
    # outside the stored range
    assert k_betti(C, K0(), 5) == 0


def test_negative_betti_numbers_are_not_clamped():
    (x,) = Z1.gens()
    C = ChainComplex.from_matrices(Z1, 0, [1, 1, 1], [[[x - 1]], [[x - 1]]])
    assert k_betti(C, K0(), 1) == -1


def test_induced_complex_examples():
    C = x_minus_one()
    assert induced_complex(GroupHom.identity(1), C) == C
    (x,) = Z1.gens()
    D = ChainComplex.from_matrices(Z1, 0, [1, 1], [[[x**2 - x]]])
    assert induced_complex(GroupHom.identity(1), D) == D
    with pytest.raises(ValueError):
        induced_complex(GroupHom.identity(2), C)


def test_betti_locus_examples():
    C = x_minus_one()
    L = betti_jump_locus(C, K0(), 0, 0)
    assert L.groups == (Sublattice.zero(1),)
    r = verify_betti_locus(C, K0(), 0, 0, 1, 3)
    assert r.ok and r.checked == 7
    Z = ChainComplex.from_matrices(Z1, 0, [1, 1], [PolyMatrix.zeros(Z1, 1, 1)])
    assert betti_jump_locus(Z, K0(), 0, 0).ell == 0
    assert verify_betti_locus(Z, K0(), 0, 0, 2, 2).ok

    x1, x2 = Z2.gens()
    D = ChainComplex.from_matrices(Z2, 0, [2, 2], [[[x1 - x2, 0], [0, x1 - x2]]])
    L = betti_jump_locus(D, K0(), 0, 1)
    assert L.groups == (Sublattice.span(2, [[1, 1]]),)
    assert verify_betti_locus(D, K0(), 0, 1, 1, 2).ok
    E = ChainComplex.from_matrices(Z2, 0, [1, 1], [[[x1 - x2]]])
    assert verify_betti_locus(E, K0(), 0, 0, 2, 2).ok


def test_augmentation_report_examples():
    P = Z1
    C = ChainComplex.from_matrices(P, 0, [1, 1], [[[1]]])
    assert minors_outside_augmentation(C, K0(), 0).holds
    report = minors_outside_augmentation(x_minus_one(), K0(), 0)
    assert not report.holds
    (x,) = Z1.gens()
    D = ChainComplex.from_matrices(P, 0, [2, 2], [[[1, x], [0, 1]]])
    assert betti_jump_locus(D, K0(), 0, 0).ell == 0
    assert minors_outside_augmentation(D, K0(), 0).holds


def test_mapping_cone_shape_and_chain_condition():
    rng = random.Random(41)
    for _ in range(40):
        ring = rng.choice(RINGS)
        C = random_complex(rng, GroupRing(ring, rng.randint(1, 2)))
        cone = mapping_cone_of_identity(C)
        assert validate_complex(cone)
        for n in cone.indices():
            assert cone.rank(n) == C.rank(n - 1) + C.rank(n)


def _complexes(seed, n):
    rng = random.Random(seed)
    for _ in range(n):
        ring = rng.choice(RINGS)
        P = GroupRing(ring, rng.randint(1, 2))
        yield rng, P, random_complex(rng, P), random_hset(rng, ring)


def test_betti_numbers_only_grow():
    for rng, P, C, hset in _complexes(42, 100):
        for _ in range(3):
            p = random_hom(rng, P.rank, rng.randint(0, 2))
            pC = induced_complex(p, C)
            assert validate_complex(pC)
            for k in C.indices():
                assert k_betti(pC, hset, k) >= k_betti(C, hset, k)


def test_j_split_equivalence():
    for rng, P, C, hset in _complexes(43, 40):
        q = rng.randint(0, 1)
        for k in C.indices():
            base = k_betti(C, hset, k)
            for p in box_homs(P.rank, 1, 2):
                pC = induced_complex(p, C)
                assert (k_betti(pC, hset, k) > base + q) == j_split_holds(C, pC, hset, k, q)


def test_betti_loci_are_correct():
    for rng, P, C, hset in _complexes(44, 40):
        q = rng.randint(0, 1)
        for k in C.indices():
            assert verify_betti_locus(C, hset, k, q, rng.randint(1, 2), 2, method="auto").ok


def test_empty_locus_implies_minors_off_augmentation():
    seen = 0
    for rng, P, C, hset in _complexes(45, 80):
        for k in C.indices():
            if betti_jump_locus(C, hset, k, 0, method="auto").ell == 0:
                seen += 1
                assert minors_outside_augmentation(C, hset, k).holds
    assert seen > 0


def test_cones_of_identity_never_jump():
    rng = random.Random(46)
    for _ in range(30):
        C = random_complex(rng, GroupRing(ZZ, rng.randint(1, 2)))
        cone = mapping_cone_of_identity(C)
        for k in range(cone.lowest_index - 1, cone.highest_index + 2):
            assert betti_jump_locus(cone, K0(), k, 0, method="auto").ell == 0
            assert minors_outside_augmentation(cone, K0(), k).holds
