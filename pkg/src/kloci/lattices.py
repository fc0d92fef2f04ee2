"""Exact integer lattice algebra.

Sublattices of ``Z^s`` (we identify the dual ``Z^{s*}`` with row vectors)
are stored by their row Hermite normal form, which makes equality of
lattices equality of tuples.  The HNF convention used throughout:

* nonzero rows first, pivot columns strictly increasing downwards;
* every pivot is positive;
* entries above a pivot lie in ``[0, pivot)``.

All arithmetic is on Python ints; nothing here ever touches floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

Matrix = list[list[int]]
Row = tuple[int, ...]


def _copy(M: Iterable[Sequence[int]]) -> Matrix:
    return [list(r) for r in M]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(c) for c in zip(*M)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], inner: int | None = None) -> Matrix:
    Bt = transpose(B, inner)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def hermite_normal_form(M: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[Matrix, Matrix]:
    """Row HNF ``H`` of ``M`` together with a unimodular ``U`` with ``H = U M``.

    ``ncols`` is only needed for a matrix with no rows.
    """
    A = _copy(M)
    m = len(A)
    n = len(A[0]) if A else (ncols or 0)
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[piv] = A[piv], A[r]
            U[r], U[piv] = U[piv], U[r]
            clean = True
            for i in range(r + 1, m):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
                    clean = clean and A[i][c] == 0
            if clean:
                break
        if not A[r][c]:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
            U[r] = [-x for x in U[r]]
        p = A[r][c]
        for i in range(r):
            q = A[i][c] // p
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
    return A, U


def smith_invariants(M: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors ``d_1 | d_2 | ...`` of an integer matrix."""
    A = _copy(M)
    out: list[int] = []
    while A and A[0]:
        entries = [(abs(A[i][j]), i, j) for i in range(len(A)) for j in range(len(A[0])) if A[i][j]]
        if not entries:
            break
        _, i0, j0 = min(entries)
        A[0], A[i0] = A[i0], A[0]
        for row in A:
            row[0], row[j0] = row[j0], row[0]
        while True:
            p = A[0][0]
            moved = False
            for i in range(1, len(A)):
                q = A[i][0] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[0])]
            for j in range(1, len(A[0])):
                q = A[0][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[0]
            rest = [(abs(A[i][0]), i, 0) for i in range(1, len(A)) if A[i][0]]
            rest += [(abs(A[0][j]), 0, j) for j in range(1, len(A[0])) if A[0][j]]
            if rest:
                _, i1, j1 = min(rest)
                A[0], A[i1] = A[i1], A[0]
                for row in A:
                    row[0], row[j1] = row[j1], row[0]
                moved = True
            if moved:
                continue
            bad = next(
                (i for i in range(1, len(A)) for j in range(1, len(A[0])) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            A[0] = [x + y for x, y in zip(A[0], A[bad])]
        out.append(abs(A[0][0]))
        A = [row[1:] for row in A[1:]]
    return out


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism ``Z^s -> Z^t``; row ``i`` is the component ``p_i``."""

    matrix: tuple[Row, ...]
    s: int

    def __post_init__(self) -> None:
        if any(len(r) != self.s for r in self.matrix):
            raise ValueError("ragged homomorphism matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], s: int | None = None) -> GroupHom:
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if s is None:
            if not rows:
                raise ValueError("s is required for a homomorphism with t = 0")
            s = len(rows[0])
        return cls(rows, s)

    @classmethod
    def zero(cls, s: int, t: int) -> GroupHom:
        return cls(tuple((0,) * s for _ in range(t)), s)

    @classmethod
    def identity(cls, s: int) -> GroupHom:
        return cls(tuple(tuple(r) for r in identity(s)), s)

    @property
    def t(self) -> int:
        return len(self.matrix)

    def __call__(self, a: Sequence[int]) -> Row:
        return tuple(sum(x * y for x, y in zip(row, a)) for row in self.matrix)

    def compose(self, inner: GroupHom) -> GroupHom:
        """``self`` after ``inner``."""
        if inner.t != self.s:
            raise ValueError(f"cannot compose: inner has t={inner.t}, outer has s={self.s}")
        M = matmul(self.matrix, inner.matrix, inner.t) if self.matrix else []
        return GroupHom(tuple(tuple(r) for r in M), inner.s)


def box_homs(s: int, t: int, bound: int) -> Iterator[GroupHom]:
    """Every ``p`` in ``hom(Z^s, Z^t)`` with entries in ``[-bound, bound]``."""
    rng = range(-bound, bound + 1)
    for flat in product(rng, repeat=s * t):
        yield GroupHom(tuple(flat[i * s:(i + 1) * s] for i in range(t)), s)


@dataclass(frozen=True)
class Sublattice:
    """A subgroup of ``Z^s`` given by its canonical HNF basis."""

    s: int
    basis: tuple[Row, ...]

    @classmethod
    def span(cls, s: int, rows: Iterable[Sequence[int]]) -> Sublattice:
        rows = [list(r) for r in rows]
        if any(len(r) != s for r in rows):
            raise ValueError(f"generators must have length {s}")
        H, _ = hermite_normal_form(rows, s)
        return cls(s, tuple(tuple(r) for r in H if any(r)))

    @classmethod
    def full(cls, s: int) -> Sublattice:
        return cls(s, tuple(tuple(r) for r in identity(s)))

    @classmethod
    def zero(cls, s: int) -> Sublattice:
        return cls(s, ())

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __contains__(self, v: Sequence[int]) -> bool:
        return self.contains(v)

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.s:
            raise ValueError(f"vector of length {len(v)} in a lattice of rank {self.s}")
        w = list(v)
        for row in self.basis:
            c = next(j for j, x in enumerate(row) if x)
            if w[c] % row[c]:
                return False
            q = w[c] // row[c]
            if q:
                w = [x - q * y for x, y in zip(w, row)]
        return not any(w)

    def issubset(self, other: Sublattice) -> bool:
        self._check(other)
        return all(other.contains(r) for r in self.basis)

    def intersect(self, other: Sublattice) -> Sublattice:
        self._check(other)
        if not self.basis or not other.basis:
            return Sublattice.zero(self.s)
        # (x, z) with x*B1 + z*B2 = 0 gives x*B1 in both lattices
        stacked = list(self.basis) + list(other.basis)
        rel = kernel_lattice(transpose(stacked), len(stacked))
        r1 = self.rank
        return Sublattice.span(
            self.s,
            [matmul([w[:r1]], self.basis)[0] for w in rel.basis],
        )

    def is_full(self) -> bool:
        return self.basis == Sublattice.full(self.s).basis

    def is_proper(self) -> bool:
        return not self.is_full()

    def is_direct_summand(self) -> bool:
        return all(d == 1 for d in smith_invariants(self.basis))

    def annihilator(self) -> Sublattice:
        """Integer vectors orthogonal to every element of the lattice."""
        return kernel_lattice(self.basis, self.s)

    def _check(self, other: Sublattice) -> None:
        if other.s != self.s:
            raise ValueError(f"ambient rank mismatch: {self.s} vs {other.s}")


def kernel_lattice(M: Sequence[Sequence[int]], s: int | None = None) -> Sublattice:
    """``{v in Z^s : M v = 0}``, which is always a saturated sublattice."""
    M = _copy(M)
    if s is None:
        if not M:
            raise ValueError("s is required for a matrix without rows")
        s = len(M[0])
    if not M:
        return Sublattice.full(s)
    H, U = hermite_normal_form(transpose(M), len(M))
    return Sublattice.span(s, [u for h, u in zip(H, U) if not any(h)])


def saturation(L: Sublattice) -> Sublattice:
    return kernel_lattice(L.annihilator().basis, L.s)


def hom_rows_in(L: Sublattice, p: GroupHom) -> bool:
    if p.s != L.s:
        raise ValueError(f"homomorphism has s={p.s}, lattice has s={L.s}")
    return all(L.contains(row) for row in p.matrix)


def lattice_contains(L: Sublattice, v: Sequence[int]) -> bool:
    return L.contains(v)


def lattice_intersect(a: Sublattice, b: Sublattice) -> Sublattice:
    return a.intersect(b)


def is_proper(L: Sublattice) -> bool:
    return L.is_proper()


def is_direct_summand(L: Sublattice) -> bool:
    return L.is_direct_summand()
