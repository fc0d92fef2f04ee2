"""Jump loci of K-modules and their brute-force verification.

For a finite set ``delta`` of Laurent polynomials the set of ``p`` in
``hom(Z^s, Z^t)`` for which ``p_*(delta)`` is a K-set is a finite union of
``G^t`` where every ``G`` is the partition subgroup of a K-partition of
``supp(delta)``.  :func:`module_jump_locus` computes that family;
:func:`verify_locus` checks it against a direct evaluation of ``p_*`` on
every homomorphism in a box.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .laurent import Exponent, GroupRing, LaurentPoly, is_k_set, support
from .lattices import GroupHom, Sublattice, box_homs, hom_rows_in, saturation
from .partitions import (
    DEFAULT_MAX_SUPPORT,
    Partition,
    SupportTooLarge,
    _coefficient_table,
    enumerate_partitions,
    is_k_partition,
    partition_subgroup,
)
from .rings import HereditarySet, Ring

DEFAULT_BUDGET = 10**6
METHODS = ("partitions", "flats", "auto")
# "auto" enumerates every partition up to this many support points, flats beyond
AUTO_PARTITION_LIMIT = 8


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class JumpLocus:
    """``{p : every row of p lies in one common group}``.

    ``k_partitions`` is the number of K-partitions (or tuples of them) that
    produced the groups, before deduplication; it is ``None`` when the
    groups were found by the flat enumeration, which skips non-closed
    partitions.
    """

    s: int
    groups: tuple[Sublattice, ...]
    k_partitions: int | None = None
    trivial_module: bool = False

    @classmethod
    def full(cls, s: int, **kw) -> JumpLocus:
        return cls(s, (Sublattice.full(s),), **kw)

    @classmethod
    def empty(cls, s: int, **kw) -> JumpLocus:
        return cls(s, (), **kw)

    @classmethod
    def build(cls, s: int, groups: Iterable[Sublattice], prune: bool = True, **kw) -> JumpLocus:
        return cls(s, canonical_groups(groups, prune), **kw)

    @property
    def ell(self) -> int:
        return len(self.groups)

    @property
    def proper(self) -> tuple[bool, ...]:
        return tuple(g.is_proper() for g in self.groups)

    def is_empty(self) -> bool:
        return not self.groups

    def is_everything(self) -> bool:
        return any(g.is_full() for g in self.groups)

    def contains(self, p: GroupHom) -> bool:
        if p.s != self.s:
            raise ValueError(f"homomorphism has s={p.s}, locus has s={self.s}")
        return any(hom_rows_in(g, p) for g in self.groups)

    __contains__ = contains


def canonical_groups(groups: Iterable[Sublattice], prune: bool = True) -> tuple[Sublattice, ...]:
    uniq = sorted(set(groups), key=lambda g: (-g.rank, g.basis))
    if prune:
        uniq = [g for g in uniq if not any(h != g and g.issubset(h) for h in uniq)]
    return tuple(uniq)


# ---------------------------------------------------------------------------
# enumeration


def closed_partitions(ground: Sequence[Exponent]) -> Iterator[Partition]:
    """Partitions of ``ground`` into the cosets of a flat of its differences.

    A partition ``pi`` and its closure (the fibres of a generic element of
    ``H(pi)``) have the same partition subgroup, and coarsening only shrinks
    the block-sum ideal, so the closed K-partitions already produce every
    group of the locus.  There are far fewer of them than partitions.
    """
    ground = tuple(ground)
    if not ground:
        yield Partition((), ())
        return
    s = len(ground[0])
    diffs = sorted(
        {tuple(x - y for x, y in zip(a, b)) for i, a in enumerate(ground) for b in ground[:i]}
    )
    start = Sublattice.zero(s)
    seen = {start}
    queue = [start]
    while queue:
        W = queue.pop(0)
        yield _cosets(ground, W)
        for d in diffs:
            if W.contains(d):
                continue
            W2 = saturation(Sublattice.span(s, list(W.basis) + [d]))
            if W2 not in seen:
                seen.add(W2)
                queue.append(W2)


def _cosets(ground: tuple[Exponent, ...], W: Sublattice) -> Partition:
    labels: list[int] = []
    reps: list[Exponent] = []
    for a in ground:
        for j, r in enumerate(reps):
            if W.contains(tuple(x - y for x, y in zip(a, r))):
                labels.append(j)
                break
        else:
            labels.append(len(reps))
            reps.append(a)
    return Partition.from_labels(ground, labels)


def _resolve(delta: Sequence[LaurentPoly], parent: GroupRing | None) -> GroupRing:
    if parent is not None:
        if any(f.parent != parent for f in delta):
            raise ValueError("generators do not live in the given group ring")
        return parent
    if not delta:
        raise ValueError("parent group ring is required for an empty generating set")
    parent = delta[0].parent
    if any(f.parent != parent for f in delta):
        raise ValueError("generators live in different group rings")
    return parent


def k_partition_groups(
    delta: Sequence[LaurentPoly],
    hset: HereditarySet,
    ring: Ring,
    s: int,
    method: str = "partitions",
    max_support: int = DEFAULT_MAX_SUPPORT,
) -> tuple[list[Sublattice], int | None]:
    """Partition subgroups of the K-partitions of ``supp(delta)`` and their count."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    ground = support(delta)
    if method == "auto":
        method = "partitions" if len(ground) <= min(AUTO_PARTITION_LIMIT, max_support) else "flats"
    if method == "partitions":
        parts = enumerate_partitions(ground, max_size=max_support)
    else:
        parts = closed_partitions(ground)
    groups: set[Sublattice] = set()
    count = 0
    for pi in parts:
        if is_k_partition(delta, pi, hset, ring):
            count += 1
            groups.add(partition_subgroup(pi, s))
    return list(groups), (count if method == "partitions" else None)


def module_jump_locus(
    delta: Sequence[LaurentPoly],
    hset: HereditarySet,
    *,
    parent: GroupRing | None = None,
    method: str = "partitions",
    max_support: int = DEFAULT_MAX_SUPPORT,
    prune: bool = True,
) -> JumpLocus:
    delta = list(delta)
    parent = _resolve(delta, parent)
    groups, count = k_partition_groups(delta, hset, parent.ring, parent.rank, method, max_support)
    locus = JumpLocus.build(
        parent.rank,
        groups,
        prune,
        k_partitions=count,
        trivial_module=all(f.is_zero() for f in delta),
    )
    if not is_k_set(delta, hset, parent.ring):
        assert all(locus.proper), "non-K-module produced a non-proper group"
    assert (locus.ell > 0) == brute_force_is_k_module(
        delta, hset, GroupHom.zero(parent.rank, 1), parent=parent
    )
    return locus


def conjoin(s: int, loci: Iterable[JumpLocus], prune: bool = True) -> JumpLocus:
    """Locus of ``p`` lying in every one of ``loci``: pairwise intersections."""
    current: tuple[Sublattice, ...] = (Sublattice.full(s),)
    count: int | None = 1
    for locus in loci:
        if locus.s != s:
            raise ValueError("ambient rank mismatch")
        if count is not None and locus.k_partitions is not None:
            count *= locus.k_partitions
        else:
            count = None
        current = canonical_groups(
            (g.intersect(h) for g in current for h in locus.groups), prune
        )
        if not current:
            break
    return JumpLocus(s, current, k_partitions=count if current else 0)


def multi_module_jump_locus(
    modules: Sequence[Sequence[LaurentPoly]],
    hset: HereditarySet,
    *,
    parent: GroupRing | None = None,
    method: str = "partitions",
    max_support: int = DEFAULT_MAX_SUPPORT,
    prune: bool = True,
) -> JumpLocus:
    modules = [list(m) for m in modules]
    if parent is None:
        parent = _resolve([f for m in modules for f in m], None)
    loci = [
        module_jump_locus(m, hset, parent=parent, method=method, max_support=max_support, prune=prune)
        for m in modules
    ]
    return conjoin(parent.rank, loci, prune)


def locus_membership(locus: JumpLocus, p: GroupHom) -> bool:
    return locus.contains(p)


# ---------------------------------------------------------------------------
# oracles


def brute_force_is_k_module(
    delta: Sequence[LaurentPoly],
    hset: HereditarySet,
    p: GroupHom,
    *,
    parent: GroupRing | None = None,
) -> bool:
    """Apply ``p_*`` to every generator and test the image directly."""
    delta = list(delta)
    parent = _resolve(delta, parent)
    target = GroupRing(parent.ring, p.t)
    return is_k_set([f.induced(p, target) for f in delta], hset, parent.ring)


def _box_array(s: int, t: int, box: int) -> np.ndarray:
    flat = np.array(list(product(range(-box, box + 1), repeat=s * t)), dtype=np.int64)
    return flat.reshape(-1, t, s)


def box_size(s: int, t: int, box: int) -> int:
    return (2 * box + 1) ** (s * t)


def check_budget(s: int, t: int, box: int, budget: int) -> int:
    if t < 1 or box < 1:
        raise ValueError("need t >= 1 and box >= 1")
    n = box_size(s, t, box)
    if n > budget:
        raise BudgetExceeded(f"box of {n} homomorphisms exceeds the budget of {budget}")
    return n


def batch_is_k_module(
    delta: Sequence[LaurentPoly], hset: HereditarySet, ring: Ring, P: np.ndarray
) -> np.ndarray | None:
    """Vectorized direct oracle over a stack ``P`` of shape ``(N, t, s)``.

    Each coefficient of ``p_*(f)`` is the sum of the coefficients of ``f``
    over one fibre of ``p``, so the coefficient ideal of the image is the
    ideal generated by the fibre sums ``S[a] = sum of r_a' with p(a') = p(a)``.
    Returns ``None`` when the numbers do not fit comfortably in int64.
    """
    N = P.shape[0]
    ground = support(delta)
    if not ground:
        return np.ones(N, dtype=bool)
    table = np.array(_coefficient_table(delta, ground), dtype=object).T  # (n, d)
    if int(np.abs(table).max()) * len(ground) >= 2**60:
        return None
    E = np.array(ground, dtype=np.int64)
    if int(np.abs(E).max()) * int(np.abs(P).max(initial=0)) * E.shape[1] >= 2**60:
        return None
    img = np.einsum("nts,ks->nkt", P, E)
    same = (img[:, :, None, :] == img[:, None, :, :]).all(axis=-1)
    S = same.astype(np.int64) @ table.astype(np.int64)
    g = np.gcd.reduce(np.abs(S.reshape(N, -1)), axis=1)
    out = np.empty(N, dtype=bool)
    for val in np.unique(g):
        out[g == val] = hset.contains(ring, ring.ideal([int(val)]))
    return out


def batch_membership(locus: JumpLocus, P: np.ndarray) -> np.ndarray:
    """Locus membership over a stack of homomorphisms.

    A saturated ``G`` equals the set of vectors killed by its annihilator,
    so a row lies in ``G`` iff every annihilator row is orthogonal to it.
    """
    N = P.shape[0]
    out = np.zeros(N, dtype=bool)
    for g in locus.groups:
        if not g.is_direct_summand():
            out |= np.array([locus_membership(JumpLocus(locus.s, (g,)), _hom(p)) for p in P])
            continue
        A = np.array(g.annihilator().basis, dtype=np.int64).reshape(-1, locus.s)
        out |= (np.einsum("nts,ks->ntk", P, A) == 0).all(axis=(1, 2))
    return out


def _hom(arr: np.ndarray) -> GroupHom:
    return GroupHom(tuple(tuple(int(x) for x in row) for row in arr), arr.shape[1])


@dataclass
class VerificationReport:
    t: int
    box: int
    checked: int = 0
    disagreements: int = 0
    oracle_true: int = 0
    first_counterexample: GroupHom | None = None
    locus: JumpLocus | None = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return self.disagreements == 0

    def record(self, p: GroupHom, predicted: bool, actual: bool) -> None:
        self.checked += 1
        self.oracle_true += actual
        if predicted != actual:
            self.disagreements += 1
            if self.first_counterexample is None:
                self.first_counterexample = p


def compare_over_box(
    locus: JumpLocus,
    oracle: Callable[[GroupHom], bool],
    t: int,
    box: int,
    budget: int = DEFAULT_BUDGET,
) -> VerificationReport:
    """Generic scalar comparison of ``locus`` with ``oracle`` over the box."""
    check_budget(locus.s, t, box, budget)
    report = VerificationReport(t, box, locus=locus)
    for p in box_homs(locus.s, t, box):
        report.record(p, locus.contains(p), oracle(p))
    return report


def _as_modules(x: Sequence) -> list[list[LaurentPoly]]:
    x = list(x)
    if x and all(isinstance(f, LaurentPoly) for f in x):
        return [x]
    return [list(m) for m in x]


def verify_locus(
    modules: Sequence,
    hset: HereditarySet,
    t: int,
    box: int,
    *,
    parent: GroupRing | None = None,
    locus: JumpLocus | None = None,
    budget: int = DEFAULT_BUDGET,
    vectorized: bool = True,
    method: str = "partitions",
    max_support: int = DEFAULT_MAX_SUPPORT,
    prune: bool = True,
) -> VerificationReport:
    """Compare the jump locus with the direct K-module test on every ``p`` in the box.

    ``modules`` is either one generating set or a list of them.
    """
    modules = _as_modules(modules)
    if parent is None:
        parent = _resolve([f for m in modules for f in m], None)
    s, ring = parent.rank, parent.ring
    check_budget(s, t, box, budget)
    if locus is None:
        locus = multi_module_jump_locus(
            modules, hset, parent=parent, method=method, max_support=max_support, prune=prune
        )

    if vectorized:
        P = _box_array(s, t, box)
        actual = np.ones(P.shape[0], dtype=bool)
        for m in modules:
            got = batch_is_k_module(m, hset, ring, P)
            if got is None:
                break
            actual &= got
        else:
            predicted = batch_membership(locus, P)
            bad = np.flatnonzero(predicted != actual)
            return VerificationReport(
                t,
                box,
                checked=int(P.shape[0]),
                disagreements=int(bad.size),
                oracle_true=int(actual.sum()),
                first_counterexample=_hom(P[bad[0]]) if bad.size else None,
                locus=locus,
            )

    def oracle(p: GroupHom) -> bool:
        return all(brute_force_is_k_module(m, hset, p, parent=parent) for m in modules)

    return compare_over_box(locus, oracle, t, box, budget)
