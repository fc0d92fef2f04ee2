from itertools import product

import pytest

from kloci.rings import (
    K0,
    K1,
    ZZ,
    Essential,
    FromFilter,
    FromHereditary,
    Ideal,
    Ring,
    StrictSubsetOf,
    StrictSupersetOf,
    SubsetOf,
    SupersetOf,
    Zmod,
    annihilator,
    hset_contains,
    ideal_contains,
    ideal_from_generators,
)

MODULI = range(2, 61)


def elements(ring: Ring, ideal: Ideal) -> frozenset[int]:
    n = ring.modulus
    return frozenset(ideal.gen * k % n for k in range(n))


def test_ideal_from_generators_examples():
    assert ideal_from_generators(ZZ, [1, -1]) == Ideal(1)
    assert ideal_from_generators(ZZ, []) == Ideal(0)
    assert ideal_from_generators(Zmod(6), [3]) == Ideal(3)
    assert ideal_from_generators(Zmod(6), [6, 12]) == Ideal(0)
    assert ideal_from_generators(Zmod(6), [4]) == Ideal(2)
    assert ideal_from_generators(ZZ, [-6, 4]) == Ideal(2)


def test_ideal_contains_examples():
    assert ideal_contains(ZZ, Ideal(2), Ideal(6))
    assert not ideal_contains(ZZ, Ideal(6), Ideal(2))
    for ring in (ZZ, Zmod(6), Zmod(4)):
        for g in (0, 1, 2, 3):
            assert ideal_contains(ring, ring.ideal([g]), Ideal(0))


def test_annihilator_examples():
    assert annihilator(Zmod(6), Ideal(3)) == Ideal(2)
    assert annihilator(ZZ, Ideal(5)) == Ideal(0)
    assert annihilator(Zmod(6), Ideal(1)) == Ideal(0)
    assert annihilator(ZZ, Ideal(0)) == Ideal(1)


def test_hset_contains_examples():
    assert hset_contains(ZZ, K0(), Ideal(0))
    assert hset_contains(Zmod(6), K1(), Ideal(3))
    assert not hset_contains(ZZ, K1(), Ideal(2))


@pytest.mark.parametrize("n", MODULI)
def test_ideal_operations_match_element_sets(n):
    ring = Zmod(n)
    ideals = ring.ideals()
    sets = {I: elements(ring, I) for I in ideals}
    assert len(set(sets.values())) == len(ideals)
    for I in ideals:
        ring.check_ideal(I)
        ann = frozenset(y for y in range(n) if all(x * y % n == 0 for x in sets[I]))
        assert sets[ring.annihilator(I)] == ann
        for J in ideals:
            assert ring.contains(I, J) == (sets[J] <= sets[I])
            assert sets[ring.intersection(I, J)] == sets[I] & sets[J]
        essential = I.gen != 0 and all(sets[I] & sets[J] != {0} for J in ideals if J.gen != 0)
        assert ring.is_essential(I) == essential


def _hsets(ring: Ring):
    ideals = ring.ideals()
    yield K0()
    yield K1()
    for I in ideals:
        yield SubsetOf(I)
        if I.gen != 0:
            yield StrictSubsetOf(I)
        for f in _filters(ring, I):
            yield FromFilter(f)


def _filters(ring: Ring, I: Ideal):
    yield SupersetOf(I)
    if I.gen != 1:
        yield StrictSupersetOf(I)
    yield Essential()
    yield FromHereditary(K1())
    yield FromHereditary(SubsetOf(I))


@pytest.mark.parametrize("n", [2, 4, 6, 8, 9, 12, 30, 36, 60])
def test_hereditary_sets_are_downward_closed_and_nonempty(n):
    ring = Zmod(n)
    ideals = ring.ideals()
    for h in _hsets(ring):
        assert h.contains(ring, ring.zero_ideal), h
        for I, J in product(ideals, repeat=2):
            if h.contains(ring, I) and ring.contains(I, J):
                assert h.contains(ring, J), (h, I, J)


@pytest.mark.parametrize("n", [2, 4, 6, 8, 9, 12, 30, 36, 60])
def test_filters_are_upward_closed(n):
    ring = Zmod(n)
    ideals = ring.ideals()
    for I in ideals:
        for f in _filters(ring, I):
            assert f.contains(ring, ring.unit_ideal) or not any(f.contains(ring, J) for J in ideals)
            for A, B in product(ideals, repeat=2):
                if f.contains(ring, A) and ring.contains(B, A):
                    assert f.contains(ring, B), (f, A, B)


@pytest.mark.parametrize("n", MODULI)
def test_annihilator_is_antitone(n):
    ring = Zmod(n)
    for I, J in product(ring.ideals(), repeat=2):
        if ring.contains(I, J):
            assert ring.contains(ring.annihilator(J), ring.annihilator(I))


def test_integer_hereditary_sets():
    gens = range(0, 31)
    for a in gens:
        I = ZZ.ideal([a])
        assert K1().contains(ZZ, I) == K0().contains(ZZ, I)
        for b in gens:
            J = ZZ.ideal([b])
            for h in (SubsetOf(ZZ.ideal([6])), K0(), FromFilter(SupersetOf(Ideal(4)))):
                if h.contains(ZZ, I) and ZZ.contains(I, J):
                    assert h.contains(ZZ, J)


def test_integer_essential_ideals_are_the_nonzero_ones():
    assert not ZZ.is_essential(Ideal(0))
    assert all(ZZ.is_essential(Ideal(g)) for g in range(1, 20))


def test_invalid_rings_and_bounds():
    with pytest.raises(ValueError):
        Ring(1)
    with pytest.raises(ValueError):
        Ring.mod(0)
    with pytest.raises(ValueError):
        StrictSubsetOf(Ideal(0))
    with pytest.raises(ValueError):
        StrictSupersetOf(Ideal(1))
    with pytest.raises(ValueError):
        Zmod(6).check_ideal(Ideal(4))
    with pytest.raises(ValueError):
        ZZ.ideals()


def test_strict_subset_excludes_bound():
    ring = Zmod(12)
    h = StrictSubsetOf(Ideal(2))
    assert not h.contains(ring, Ideal(2))
    assert h.contains(ring, Ideal(4))
    assert h.contains(ring, Ideal(6))
    assert not h.contains(ring, Ideal(3))
