import random
from itertools import permutations

import pytest

from instances import RINGS, random_entry, random_hom, random_hset, random_matrix, small_exponents
from kloci.jumploci import BudgetExceeded
from kloci.laurent import GroupRing, is_k_set
from kloci.lattices import Sublattice
from kloci.matrank import (
    PolyMatrix,
    constant_annihilator,
    determinant,
    k_rank,
    mccoy_rank,
    mccoy_rank_direct,
    minors,
    polynomial_annihilator,
    rank_drop_locus,
    rank_jump_locus,
    verify_rank_locus,
)
from kloci.rings import K0, K1, ZZ, Zmod

Z1 = GroupRing(ZZ, 1)
Z2 = GroupRing(ZZ, 2)
Z3 = GroupRing(ZZ, 3)


def leibniz(A: PolyMatrix):
    n = A.nrows
    total = A.parent.zero
    for perm in permutations(range(n)):
        inv = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = A.parent.one
        for i, j in enumerate(perm):
            term = term * A[i, j]
        total = total - term if inv % 2 else total + term
    return total


def test_determinant_examples():
    (x,) = Z1.gens()
    assert determinant(PolyMatrix.from_rows(Z1, [[x - 1]])) == x - 1
    assert determinant(PolyMatrix.from_rows(Z1, [[x, 1], [1, x]])) == x**2 - 1
    D = PolyMatrix.from_rows(Z1, [[x - 1, 0], [0, x - 1]])
    assert determinant(D) == x**2 - 2 * x + 1
    assert determinant(PolyMatrix.zeros(Z1, 0, 0)) == Z1.one
    with pytest.raises(ValueError):
        determinant(PolyMatrix.zeros(Z1, 1, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_determinant_matches_permutation_sum(n):
    rng = random.Random(100 + n)
    for ring in RINGS + (Zmod(4),):
        P = GroupRing(ring, 2)
        exps = small_exponents(2)
        for _ in range(15):
            A = PolyMatrix.from_rows(P, [[random_entry(rng, P, exps) for _ in range(n)] for _ in range(n)], n)
            assert determinant(A) == leibniz(A)


def test_minors_examples():
    P = GroupRing(ZZ, 0)
    A = PolyMatrix.from_rows(P, [[1, 2], [3, 4]])
    assert minors(A, 1) == A.entries()
    B = PolyMatrix.from_rows(P, [[1, 2, 3], [4, 5, 6]])
    assert [m.as_dict().get((), 0) for m in minors(B, 2)] == [-3, -6, -3]
    C = PolyMatrix.from_rows(P, [[1, 1], [1, 1]])
    assert minors(C, 2) == [P.zero]
    with pytest.raises(ValueError):
        minors(C, 3)
    with pytest.raises(ValueError):
        minors(C, 0)


def test_rank_examples():
    (x,) = Z1.gens()
    assert k_rank(PolyMatrix.from_rows(Z1, [[x - 1]]), K0()) == 1
    assert k_rank(PolyMatrix.from_rows(Z1, [[x - 1, 0], [0, x - 1]]), K0()) == 2
    R6 = GroupRing(Zmod(6), 0)
    assert k_rank(PolyMatrix.from_rows(R6, [[3]]), K1()) == 0
    assert k_rank(PolyMatrix.zeros(Z1, 0, 3), K0()) == 0
    assert k_rank(PolyMatrix.zeros(Z1, 2, 2), K0()) == 0


def test_mccoy_examples():
    R6 = GroupRing(Zmod(6), 0)
    assert mccoy_rank(PolyMatrix.from_rows(R6, [[3]])) == 0
    A = PolyMatrix.from_rows(R6, [[2, 3], [3, 2]])
    assert mccoy_rank(A) == 2 == mccoy_rank_direct(A)
    (x,) = Z1.gens()
    assert mccoy_rank(PolyMatrix.from_rows(Z1, [[x - 1]])) == 1
    # every entry is even, so 3 kills them all
    B = PolyMatrix.from_rows(R6, [[2, 4], [4, 2]])
    assert mccoy_rank(B) == mccoy_rank_direct(B) == 0
    C = PolyMatrix.from_rows(R6, [[1, 2], [2, 4]])
    assert mccoy_rank(C) == mccoy_rank_direct(C) == 1


def test_constant_annihilator():
    P = GroupRing(Zmod(6), 1)
    (x,) = P.gens()
    assert constant_annihilator([3 * x, P.const(3)], P) == 2
    assert constant_annihilator([x - 1], P) is None
    assert constant_annihilator([Z1.zero], Z1) == 1
    assert constant_annihilator([Z1.one], Z1) is None


def test_polynomial_annihilator_search():
    P = GroupRing(Zmod(4), 1)
    (x,) = P.gens()
    y = polynomial_annihilator([2 * x + 2], P, box=1)
    assert y is not None and (y * (2 * x + 2)).is_zero()
    assert polynomial_annihilator([x + 1], P, box=1) is None
    with pytest.raises(ValueError):
        polynomial_annihilator([Z1.one], Z1)
    with pytest.raises(BudgetExceeded):
        polynomial_annihilator([x], P, box=3, budget=1000)


def test_rank_drop_examples():
    x1, x2 = Z2.gens()
    A = PolyMatrix.from_rows(Z2, [[x1 - x2]])
    assert rank_drop_locus(A, K0(), 1).groups == (Sublattice.span(2, [[1, 1]]),)
    assert rank_drop_locus(A, K0(), 0).is_everything()
    B = PolyMatrix.from_rows(Z2, [[x1 + x2]])
    assert rank_drop_locus(B, K0(), 1).ell == 0
    assert rank_drop_locus(A, K0(), 2).ell == 0


def test_rank_jump_examples():
    x1, x2 = Z2.gens()
    A = PolyMatrix.from_rows(Z2, [[x1 - x2]])
    assert rank_jump_locus([A], K0(), 0).groups == (Sublattice.span(2, [[1, 1]]),)
    (x,) = Z1.gens()
    assert rank_jump_locus([PolyMatrix.from_rows(Z1, [[x - 1]])], K0(), 1).ell == 0
    a, b, c = Z3.gens()
    As = [PolyMatrix.from_rows(Z3, [[a - b]]), PolyMatrix.from_rows(Z3, [[a - c]])]
    L = rank_jump_locus(As, K0(), 0)
    assert L.groups == (Sublattice.span(3, [[1, 1, 1]]),)
    assert verify_rank_locus(As, K0(), 0, 1, 2).ok
    with pytest.raises(ValueError):
        rank_jump_locus([], K0(), 0)
    assert rank_jump_locus([], K0(), 0, parent=Z3).is_everything()


def _matrices(seed, n):
    rng = random.Random(seed)
    for _ in range(n):
        ring = rng.choice(RINGS)
        s = rng.randint(1, 2)
        P = GroupRing(ring, s)
        yield rng, P, random_matrix(rng, P), random_hset(rng, ring)


def test_rank_is_monotone_under_induced_maps():
    for rng, P, A, hset in _matrices(31, 200):
        r = k_rank(A, hset)
        assert 0 <= r <= min(A.shape)
        for _ in range(3):
            p = random_hom(rng, P.rank, rng.randint(0, 2))
            assert k_rank(A.induced(p), hset) <= r


def test_minor_k_sets_are_upward_closed():
    for rng, P, A, hset in _matrices(32, 200):
        flags = [is_k_set(minors(A, k), hset, P.ring) for k in range(1, min(A.shape) + 1)]
        for a, b in zip(flags, flags[1:]):
            assert b or not a
        r = k_rank(A, hset)
        # the scan agrees with the definition
        assert r == max((k for k, f in enumerate(flags, 1) if not f), default=0)


def test_rank_is_transpose_invariant():
    for rng, P, A, hset in _matrices(33, 150):
        assert k_rank(A, hset) == k_rank(A.transpose(), hset)


def test_k0_rank_over_integers_is_generic_rank():
    # over a domain with K0 the rank is the largest size of a nonzero minor
    for rng, P, A, hset in _matrices(34, 150):
        if P.ring.modulus:
            continue
        nonzero = [k for k in range(1, min(A.shape) + 1) if any(not m.is_zero() for m in minors(A, k))]
        assert k_rank(A, K0()) == max(nonzero, default=0)


def test_mccoy_routes_agree_on_random_matrices():
    rng = random.Random(35)
    for _ in range(150):
        ring = rng.choice((Zmod(4), Zmod(6), Zmod(12), ZZ))
        P = GroupRing(ring, rng.randint(0, 2))
        exps = small_exponents(P.rank) if P.rank else [()]
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        rows = [[random_entry(rng, P, exps) for _ in range(n)] for _ in range(m)]
        A = PolyMatrix.from_rows(P, rows, n)
        assert mccoy_rank(A) == mccoy_rank_direct(A)


def test_rank_loci_match_recomputation():
    for rng, P, A, hset in _matrices(36, 60):
        q = rng.randint(0, 1)
        r = verify_rank_locus([A], hset, q, rng.randint(1, 2), 2, method="auto")
        assert r.ok
        for c in range(0, 3):
            L = rank_drop_locus(A, hset, c)
            base = k_rank(A, hset)
            for _ in range(5):
                p = random_hom(rng, P.rank, rng.randint(1, 2))
                assert L.contains(p) == (k_rank(A.induced(p), hset) <= base - c)


def test_matrix_algebra():
    x1, x2 = Z2.gens()
    A = PolyMatrix.from_rows(Z2, [[x1, 1], [0, x2]])
    I = PolyMatrix.identity(Z2, 2)
    assert A @ I == A
    assert (A + (-A)).is_zero()
    assert A.transpose().transpose() == A
    assert A.submatrix([1], [1]).entries() == [x2]
    with pytest.raises(ValueError):
        A @ PolyMatrix.zeros(Z2, 3, 1)
    with pytest.raises(ValueError):
        PolyMatrix.from_rows(Z2, [[x1], [x1, x2]], 1)
    with pytest.raises(ValueError):
        PolyMatrix.from_rows(Z2, [[Z1.one]])
