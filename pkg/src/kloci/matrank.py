"""Minors, K-rank, McCoy rank and jump loci of the K-rank."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from .jumploci import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    JumpLocus,
    VerificationReport,
    compare_over_box,
    conjoin,
    module_jump_locus,
)
from .laurent import GroupRing, LaurentPoly, is_k_set
from .lattices import GroupHom
from .partitions import DEFAULT_MAX_SUPPORT
from .rings import K1, HereditarySet


@dataclass(frozen=True)
class PolyMatrix:
    """An ``nrows x ncols`` matrix over ``parent``; either dimension may be 0."""

    parent: GroupRing
    rows: tuple[tuple[LaurentPoly, ...], ...]
    ncols: int

    def __post_init__(self) -> None:
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("matrix is not rectangular")
            for f in row:
                if f.parent != self.parent:
                    raise ValueError(f"entry {f!r} does not live in {self.parent}")

    @classmethod
    def from_rows(
        cls, parent: GroupRing, rows: Iterable[Iterable[LaurentPoly | int]], ncols: int | None = None
    ) -> PolyMatrix:
        conv = tuple(
            tuple(parent.const(f) if isinstance(f, int) else f for f in row) for row in rows
        )
        if ncols is None:
            ncols = len(conv[0]) if conv else 0
        return cls(parent, conv, ncols)

    @classmethod
    def zeros(cls, parent: GroupRing, m: int, n: int) -> PolyMatrix:
        return cls(parent, tuple((parent.zero,) * n for _ in range(m)), n)

    @classmethod
    def identity(cls, parent: GroupRing, n: int) -> PolyMatrix:
        return cls.from_rows(parent, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.rows[i][j]

    def entries(self) -> list[LaurentPoly]:
        return [f for row in self.rows for f in row]

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.entries())

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> PolyMatrix:
        return PolyMatrix(self.parent, tuple(tuple(self.rows[i][j] for j in cols) for i in rows), len(cols))

    def transpose(self) -> PolyMatrix:
        return PolyMatrix(
            self.parent,
            tuple(tuple(self.rows[i][j] for i in range(self.nrows)) for j in range(self.ncols)),
            self.nrows,
        )

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = self.parent.zero
                for k in range(self.ncols):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(tuple(row))
        return PolyMatrix(self.parent, tuple(out), other.ncols)

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return PolyMatrix(
            self.parent,
            tuple(tuple(a + b for a, b in zip(r, q)) for r, q in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __neg__(self) -> PolyMatrix:
        return PolyMatrix(self.parent, tuple(tuple(-a for a in r) for r in self.rows), self.ncols)

    def induced(self, p: GroupHom) -> PolyMatrix:
        target = GroupRing(self.parent.ring, p.t)
        return PolyMatrix(
            target,
            tuple(tuple(f.induced(p, target) for f in row) for row in self.rows),
            self.ncols,
        )


def determinant(A: PolyMatrix) -> LaurentPoly:
    """Division-free determinant by dynamic programming over column subsets.

    ``dp[mask]`` is the signed sum over all ways of placing the first
    ``popcount(mask)`` rows into the columns of ``mask``.
    """
    k = A.nrows
    if A.ncols != k:
        raise ValueError(f"determinant of a non-square {A.shape} matrix")
    dp = {0: A.parent.one}
    for i in range(k):
        nxt: dict[int, LaurentPoly] = {}
        for mask, val in dp.items():
            for j in range(k):
                if mask >> j & 1 or A.rows[i][j].is_zero():
                    continue
                term = val * A.rows[i][j]
                if bin(mask >> (j + 1)).count("1") % 2:
                    term = -term
                new = mask | 1 << j
                nxt[new] = nxt[new] + term if new in nxt else term
        dp = nxt
    return dp.get((1 << k) - 1, A.parent.zero)


def minors(A: PolyMatrix, k: int) -> list[LaurentPoly]:
    """All ``k``-minors, row subsets outermost, each in lexicographic order."""
    if not 1 <= k <= min(A.shape):
        raise ValueError(f"minor size {k} out of range for a {A.shape} matrix")
    if k == 1:
        return A.entries()
    return [
        determinant(A.submatrix(r, c))
        for r in combinations(range(A.nrows), k)
        for c in combinations(range(A.ncols), k)
    ]


def k_rank(A: PolyMatrix, hset: HereditarySet) -> int:
    """Largest ``k`` whose ``k``-minors are not a K-set (0 if the entries are).

    Once the ``k``-minors form a K-set so do all larger minors, so the scan
    stops at the first such ``k``.
    """
    ring = A.parent.ring
    for k in range(1, min(A.shape) + 1):
        if is_k_set(minors(A, k), hset, ring):
            return k - 1
    return min(A.shape)


def mccoy_rank(A: PolyMatrix) -> int:
    return k_rank(A, K1())


def constant_annihilator(X: Sequence[LaurentPoly], parent: GroupRing) -> int | None:
    """A nonzero ``y`` in the coefficient ring with ``y * f == 0`` for all ``f``.

    Over the integers (a domain) such ``y`` exists iff every ``f`` vanishes,
    and then ``y = 1`` works.
    """
    ring = parent.ring
    if not ring.is_finite:
        return 1 if all(f.is_zero() for f in X) else None
    for y in range(1, ring.modulus):
        if all((f * y).is_zero() for f in X):
            return y
    return None


def mccoy_rank_direct(A: PolyMatrix) -> int:
    """McCoy rank by searching for constant annihilators of each minor set."""
    if constant_annihilator(A.entries(), A.parent) is not None:
        return 0
    return max(
        (
            k
            for k in range(1, min(A.shape) + 1)
            if constant_annihilator(minors(A, k), A.parent) is None
        ),
        default=0,
    )


def polynomial_annihilator(
    X: Sequence[LaurentPoly], parent: GroupRing, box: int = 2, budget: int = DEFAULT_BUDGET
) -> LaurentPoly | None:
    """Search for a nonzero ``x`` with support in ``[-box, box]^s`` killing all of ``X``.

    Finite coefficient rings only.  This is a falsification aid: finding
    nothing does not prove that no annihilator exists.
    """
    ring = parent.ring
    if not ring.is_finite:
        raise ValueError("polynomial annihilator search needs a finite coefficient ring")
    n = ring.modulus
    positions = list(product(range(-box, box + 1), repeat=parent.rank))
    if n ** len(positions) > budget:
        raise BudgetExceeded(f"{n}^{len(positions)} candidates exceed the budget of {budget}")
    # column of M for each (generator, output exponent); x*f = 0 iff cand @ M == 0 mod n
    cols: dict[tuple[int, tuple[int, ...]], dict[int, int]] = {}
    for gi, f in enumerate(X):
        for pi, a in enumerate(positions):
            for e, c in f.terms:
                key = (gi, tuple(x + y for x, y in zip(a, e)))
                col = cols.setdefault(key, {})
                col[pi] = col.get(pi, 0) + c
    M = np.zeros((len(positions), len(cols)), dtype=np.int64)
    for ci, col in enumerate(cols.values()):
        for pi, c in col.items():
            M[pi, ci] = c
    cands = np.array(list(product(range(n), repeat=len(positions)))[1:], dtype=np.int64)
    if not cols:
        hits = np.ones(len(cands), dtype=bool)
    else:
        hits = ((cands @ M) % n == 0).all(axis=1)
    idx = np.flatnonzero(hits)
    if not idx.size:
        return None
    return parent.poly({a: int(c) for a, c in zip(positions, cands[idx[0]])})


# ---------------------------------------------------------------------------
# jump loci


def rank_drop_locus(
    A: PolyMatrix,
    hset: HereditarySet,
    c: int,
    *,
    method: str = "partitions",
    max_support: int = DEFAULT_MAX_SUPPORT,
    prune: bool = True,
) -> JumpLocus:
    """Locus of ``p`` with ``rank_K(p_*(A)) <= rank_K(A) - c``."""
    if c < 0:
        raise ValueError("drop must be nonnegative")
    s = A.parent.rank
    if c == 0:
        return JumpLocus.full(s, k_partitions=None)
    r = k_rank(A, hset)
    if r - c < 0:
        return JumpLocus.empty(s, k_partitions=0)
    # rank <= r - c  iff  the (r - c + 1)-minors form a K-set; size 1 means the entries
    gens = minors(A, r - c + 1)
    return module_jump_locus(
        gens, hset, parent=A.parent, method=method, max_support=max_support, prune=prune
    )


def rank_jump_locus(
    As: Sequence[PolyMatrix],
    hset: HereditarySet,
    q: int,
    *,
    parent: GroupRing | None = None,
    method: str = "partitions",
    max_support: int = DEFAULT_MAX_SUPPORT,
    prune: bool = True,
) -> JumpLocus:
    """Locus of ``p`` with ``rank_K(p_*(A_i)) < rank_K(A_i) - q`` for every ``i``."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    if parent is None:
        if not As:
            raise ValueError("parent group ring is required for an empty family")
        parent = As[0].parent
    s = parent.rank
    ranks = [k_rank(A, hset) for A in As]
    if any(r <= q for r in ranks):
        return JumpLocus.empty(s, k_partitions=0)
    loci = [
        module_jump_locus(
            minors(A, r - q), hset, parent=parent, method=method, max_support=max_support, prune=prune
        )
        for A, r in zip(As, ranks)
    ]
    return conjoin(s, loci, prune)


def verify_rank_locus(
    As: Sequence[PolyMatrix],
    hset: HereditarySet,
    q: int,
    t: int,
    box: int,
    *,
    parent: GroupRing | None = None,
    locus: JumpLocus | None = None,
    budget: int = DEFAULT_BUDGET,
    method: str = "partitions",
    max_support: int = DEFAULT_MAX_SUPPORT,
) -> VerificationReport:
    """Compare :func:`rank_jump_locus` with K-ranks recomputed from ``p_*(A_i)``."""
    if parent is None:
        parent = As[0].parent
    if locus is None:
        locus = rank_jump_locus(As, hset, q, parent=parent, method=method, max_support=max_support)
    ranks = [k_rank(A, hset) for A in As]

    def oracle(p: GroupHom) -> bool:
        return all(k_rank(A.induced(p), hset) < r - q for A, r in zip(As, ranks))

    return compare_over_box(locus, oracle, t, box, budget)
