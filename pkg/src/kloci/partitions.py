"""Set partitions of finite supports, K-partitions and partition subgroups."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .laurent import Exponent, LaurentPoly, support
from .lattices import Sublattice, kernel_lattice
from .rings import HereditarySet, Ideal, Ring

DEFAULT_MAX_SUPPORT = 12


class SupportTooLarge(ValueError):
    """Raised instead of enumerating a Bell number of partitions we cannot afford."""


@dataclass(frozen=True)
class Partition:
    """Partition of ``ground`` into blocks of indices.

    Blocks are sorted by their smallest index, i.e. the order in which a
    restricted growth string first mentions them.
    """

    ground: tuple[Exponent, ...]
    parts: tuple[tuple[int, ...], ...]

    @classmethod
    def from_labels(cls, ground: Sequence[Exponent], labels: Sequence[int]) -> Partition:
        blocks: dict[int, list[int]] = {}
        for i, lab in enumerate(labels):
            blocks.setdefault(lab, []).append(i)
        parts = sorted((tuple(b) for b in blocks.values()), key=lambda b: b[0])
        return cls(tuple(ground), tuple(parts))

    @classmethod
    def from_blocks(cls, ground: Sequence[Exponent], blocks: Sequence[Sequence[Exponent]]) -> Partition:
        ground = tuple(ground)
        where = {a: i for i, a in enumerate(ground)}
        parts = sorted((tuple(sorted(where[a] for a in b)) for b in blocks), key=lambda b: b[0])
        flat = sorted(i for b in parts for i in b)
        if flat != list(range(len(ground))):
            raise ValueError("blocks do not partition the ground set")
        return cls(ground, tuple(parts))

    def blocks(self) -> list[list[Exponent]]:
        return [[self.ground[i] for i in part] for part in self.parts]

    def labels(self) -> tuple[int, ...]:
        out = [0] * len(self.ground)
        for j, part in enumerate(self.parts):
            for i in part:
                out[i] = j
        return tuple(out)

    def is_coarsening_of(self, finer: Partition) -> bool:
        mine = self.labels()
        return all(len({mine[i] for i in part}) == 1 for part in finer.parts)


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length ``n`` in lexicographic order."""
    if n == 0:
        yield ()
        return
    a = [0] * n
    top = [0] * n  # top[i] = max(a[:i+1])
    while True:
        for k in range(1, n):
            top[k] = max(top[k - 1], a[k])
        yield tuple(a)
        # find the rightmost position that can still be incremented
        i = n - 1
        while i > 0 and a[i] > top[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for k in range(i + 1, n):
            a[k] = 0


def enumerate_partitions(
    ground: Sequence[Exponent], max_size: int = DEFAULT_MAX_SUPPORT
) -> Iterator[Partition]:
    ground = tuple(ground)
    if len(ground) > max_size:
        raise SupportTooLarge(
            f"support has {len(ground)} points; enumerating its partitions is capped at {max_size}"
        )
    for labels in restricted_growth_strings(len(ground)):
        yield Partition.from_labels(ground, labels)


def _coefficient_table(delta: Sequence[LaurentPoly], ground: Sequence[Exponent]) -> list[list[int]]:
    table = []
    for f in delta:
        d = f.as_dict()
        table.append([d.get(a, 0) for a in ground])
    return table


def partition_ideal(delta: Sequence[LaurentPoly], pi: Partition, ring: Ring | None = None) -> Ideal:
    """Ideal generated by the block sums of every generator."""
    if list(pi.ground) != support(delta):
        raise ValueError("partition is not a partition of the support of delta")
    if ring is None:
        if not delta:
            return Ideal(0)
        ring = delta[0].ring
    table = _coefficient_table(delta, pi.ground)
    return ring.ideal(sum(row[i] for i in part) for row in table for part in pi.parts)


def is_k_partition(
    delta: Sequence[LaurentPoly], pi: Partition, hset: HereditarySet, ring: Ring | None = None
) -> bool:
    if ring is None:
        ring = delta[0].ring if delta else None
    ideal = partition_ideal(delta, pi, ring)
    if ring is None:
        return True
    return hset.contains(ring, ideal)


def difference_rows(pi: Partition) -> list[list[int]]:
    """``a_i - a_first`` for every non-first member of every block."""
    rows = []
    for part in pi.parts:
        a0 = pi.ground[part[0]]
        for i in part[1:]:
            rows.append([x - y for x, y in zip(pi.ground[i], a0)])
    return rows


def partition_subgroup(pi: Partition, s: int | None = None) -> Sublattice:
    """Linear forms on ``Z^s`` that are constant on every block of ``pi``."""
    if s is None:
        if not pi.ground:
            raise ValueError("s is required for the empty partition")
        s = len(pi.ground[0])
    H = kernel_lattice(difference_rows(pi), s)
    # two independent routes to properness must agree
    has_big_block = any(len(b) > 1 for b in pi.parts)
    assert H.is_proper() == has_big_block, (pi, H)
    return H
