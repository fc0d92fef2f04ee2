"""Based free chain complexes over ``R[Z^s]``, K-Betti numbers and their jump loci.

Convention: elements of ``C_k = R[Z^s]^{r_k}`` are column vectors and
``d_k(v) = D_k v`` with ``D_k`` of shape ``r_{k-1} x r_k``.  Outside the
stored range the modules are zero and so are the differentials.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .jumploci import (
    DEFAULT_BUDGET,
    JumpLocus,
    VerificationReport,
    canonical_groups,
    compare_over_box,
    conjoin,
)
from .laurent import GroupRing
from .lattices import GroupHom
from .matrank import PolyMatrix, k_rank, minors, rank_drop_locus
from .partitions import DEFAULT_MAX_SUPPORT
from .rings import HereditarySet


@dataclass(frozen=True)
class ChainComplex:
    """``C_{k0} <- C_{k0+1} <- ... <- C_{k1}``.

    ``differentials[i]`` is ``D_{k0+i+1}``.
    """

    parent: GroupRing
    lowest_index: int
    ranks: tuple[int, ...]
    differentials: tuple[PolyMatrix, ...]

    def __post_init__(self) -> None:
        if any(r < 0 for r in self.ranks):
            raise ValueError("ranks must be nonnegative")
        if len(self.differentials) != max(len(self.ranks) - 1, 0):
            raise ValueError(
                f"{len(self.ranks)} modules need {max(len(self.ranks) - 1, 0)} differentials, "
                f"got {len(self.differentials)}"
            )
        for i, D in enumerate(self.differentials):
            want = (self.ranks[i], self.ranks[i + 1])
            if D.shape != want:
                k = self.lowest_index + i + 1
                raise ValueError(f"D_{k} has shape {D.shape}, expected {want}")
            if D.parent != self.parent:
                raise ValueError("differentials live in different group rings")

    @classmethod
    def from_matrices(
        cls, parent: GroupRing, lowest_index: int, ranks: Sequence[int], matrices: Sequence
    ) -> ChainComplex:
        ranks = tuple(ranks)
        diffs = []
        for i, M in enumerate(matrices):
            if not isinstance(M, PolyMatrix):
                M = PolyMatrix.from_rows(parent, M, ranks[i + 1])
            diffs.append(M)
        return cls(parent, lowest_index, ranks, tuple(diffs))

    @property
    def highest_index(self) -> int:
        return self.lowest_index + len(self.ranks) - 1

    def rank(self, k: int) -> int:
        i = k - self.lowest_index
        return self.ranks[i] if 0 <= i < len(self.ranks) else 0

    def differential(self, k: int) -> PolyMatrix:
        """``D_k``, a zero matrix of the right shape outside the stored range."""
        i = k - self.lowest_index - 1
        if 0 <= i < len(self.differentials):
            return self.differentials[i]
        return PolyMatrix.zeros(self.parent, self.rank(k - 1), self.rank(k))

    def indices(self) -> range:
        return range(self.lowest_index, self.highest_index + 1)


def validate_complex(C: ChainComplex) -> bool:
    """``D_k D_{k+1} == 0`` for every pair of composable differentials."""
    for k in range(C.lowest_index + 1, C.highest_index):
        if not (C.differential(k) @ C.differential(k + 1)).is_zero():
            return False
    return True


def k_betti(C: ChainComplex, hset: HereditarySet, k: int) -> int:
    """``r_k - rank_K(D_k) - rank_K(D_{k+1})``; may be negative."""
    return C.rank(k) - k_rank(C.differential(k), hset) - k_rank(C.differential(k + 1), hset)


def induced_complex(p: GroupHom, C: ChainComplex) -> ChainComplex:
    if p.s != C.parent.rank:
        raise ValueError(f"homomorphism has s={p.s}, complex lives over rank {C.parent.rank}")
    return ChainComplex(
        GroupRing(C.parent.ring, p.t),
        C.lowest_index,
        C.ranks,
        tuple(D.induced(p) for D in C.differentials),
    )


def betti_jump_locus(
    C: ChainComplex,
    hset: HereditarySet,
    k: int,
    q: int,
    *,
    method: str = "partitions",
    max_support: int = DEFAULT_MAX_SUPPORT,
    prune: bool = True,
) -> JumpLocus:
    """Locus of ``p`` with ``b_k(p_*(C)) > b_k(C) + q``.

    The Betti number jumps by more than ``q`` exactly when, for some
    ``0 <= j <= q + 1``, the rank of ``d_k`` drops by at least ``q + 1 - j``
    and the rank of ``d_{k+1}`` by at least ``j``.
    """
    if q < 0:
        raise ValueError("q must be nonnegative")
    s = C.parent.rank
    kw = dict(method=method, max_support=max_support, prune=prune)
    Dk, Dk1 = C.differential(k), C.differential(k + 1)
    groups = []
    for j in range(q + 2):
        both = conjoin(s, [rank_drop_locus(Dk, hset, q + 1 - j, **kw), rank_drop_locus(Dk1, hset, j, **kw)], prune)
        groups.extend(both.groups)
    return JumpLocus(s, canonical_groups(groups, prune))


def j_split_holds(C: ChainComplex, pC: ChainComplex, hset: HereditarySet, k: int, q: int) -> bool:
    """Right-hand side of the j-split criterion, evaluated from ranks."""
    rk, rk1 = k_rank(C.differential(k), hset), k_rank(C.differential(k + 1), hset)
    pk, pk1 = k_rank(pC.differential(k), hset), k_rank(pC.differential(k + 1), hset)
    return any(pk <= rk - (q + 1 - j) and pk1 <= rk1 - j for j in range(q + 2))


def verify_betti_locus(
    C: ChainComplex,
    hset: HereditarySet,
    k: int,
    q: int,
    t: int,
    box: int,
    *,
    locus: JumpLocus | None = None,
    budget: int = DEFAULT_BUDGET,
    method: str = "partitions",
    max_support: int = DEFAULT_MAX_SUPPORT,
) -> VerificationReport:
    if locus is None:
        locus = betti_jump_locus(C, hset, k, q, method=method, max_support=max_support)
    base = k_betti(C, hset, k)

    def oracle(p: GroupHom) -> bool:
        return k_betti(induced_complex(p, C), hset, k) > base + q

    return compare_over_box(locus, oracle, t, box, budget)


@dataclass(frozen=True)
class AugmentationCheck:
    index: int  # which differential, k or k+1
    size: int  # minor size j
    witness: tuple[int, int] | None  # (minor position, augmentation) of a minor outside I_s


@dataclass(frozen=True)
class AugmentationReport:
    checks: tuple[AugmentationCheck, ...]

    @property
    def holds(self) -> bool:
        return all(c.witness is not None for c in self.checks)


def minors_outside_augmentation(C: ChainComplex, hset: HereditarySet, k: int) -> AugmentationReport:
    """For ``i in {k, k+1}`` and ``1 <= j <= rank_K(D_i)``: is some ``j``-minor off the augmentation ideal?"""
    checks = []
    for i in (k, k + 1):
        D = C.differential(i)
        for j in range(1, k_rank(D, hset) + 1):
            witness = None
            for pos, z in enumerate(minors(D, j)):
                aug = z.augmentation()
                if aug:
                    witness = (pos, aug)
                    break
            checks.append(AugmentationCheck(i, j, witness))
    return AugmentationReport(tuple(checks))


def mapping_cone_of_identity(C: ChainComplex) -> ChainComplex:
    """``cone(id_C)``: degree ``n`` is ``C_{n-1} + C_n`` with ``[[-D_{n-1}, 0], [1, D_n]]``."""
    P = C.parent
    lo, hi = C.lowest_index, C.highest_index + 1
    ranks = [C.rank(n - 1) + C.rank(n) for n in range(lo, hi + 1)]
    diffs = []
    for n in range(lo + 1, hi + 1):
        a, b = C.rank(n - 2), C.rank(n - 1)  # target C_{n-2} + C_{n-1}
        c, d = C.rank(n - 1), C.rank(n)  # source C_{n-1} + C_n
        Dm, Dn = C.differential(n - 1), C.differential(n)
        rows = []
        for i in range(a):
            rows.append([-Dm[i, j] for j in range(c)] + [P.zero] * d)
        for i in range(b):
            rows.append([P.one if i == j else P.zero for j in range(c)] + [Dn[i, j] for j in range(d)])
        diffs.append(PolyMatrix.from_rows(P, rows, c + d))
    return ChainComplex(P, lo, tuple(ranks), tuple(diffs))
