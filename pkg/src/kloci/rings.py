"""Coefficient rings, principal ideals and hereditary sets of ideals.

Only two kinds of coefficient ring are supported: the integers and the
residue rings ``Z/n``.  Both are principal ideal rings, so every ideal
is stored as a single nonnegative generator and all the set-theoretic
questions asked about ideals (containment, annihilators, membership in a
hereditary set or a filter) reduce to gcd arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable


@dataclass(frozen=True)
class Ring:
    """``Z`` when ``modulus == 0``, otherwise ``Z/modulus``."""

    modulus: int = 0

    def __post_init__(self) -> None:
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError(f"unsupported modulus {self.modulus}; need 0 (integers) or n >= 2")

    @classmethod
    def integers(cls) -> Ring:
        return cls(0)

    @classmethod
    def mod(cls, n: int) -> Ring:
        if n < 2:
            raise ValueError(f"Z/n requires n >= 2, got {n}")
        return cls(n)

    @property
    def is_finite(self) -> bool:
        return self.modulus != 0

    def __str__(self) -> str:
        return "Z" if self.modulus == 0 else f"Z/{self.modulus}"

    def reduce(self, value: int) -> int:
        """Canonical representative of ``value``."""
        return value % self.modulus if self.modulus else value

    def elements(self) -> range:
        if not self.modulus:
            raise ValueError("the integers are not finite")
        return range(self.modulus)

    # ideals -------------------------------------------------------------

    def _normalize(self, g: int) -> int:
        g = abs(g)
        if self.modulus:
            g = gcd(g, self.modulus)
            if g == self.modulus:
                return 0
        return g

    def ideal(self, gens: Iterable[int] = ()) -> Ideal:
        g = 0
        for x in gens:
            g = gcd(g, x)
        return Ideal(self._normalize(g))

    @property
    def zero_ideal(self) -> Ideal:
        return Ideal(0)

    @property
    def unit_ideal(self) -> Ideal:
        return Ideal(1)

    def check_ideal(self, ideal: Ideal) -> None:
        g = ideal.gen
        ok = g >= 0 and (not self.modulus or g == 0 or (g < self.modulus and self.modulus % g == 0))
        if not ok:
            raise ValueError(f"{ideal} is not a normal-form ideal of {self}")

    def _size(self, ideal: Ideal) -> int:
        # For Z/n the zero ideal is generated by n; that makes divisibility uniform.
        return ideal.gen or self.modulus

    def contains(self, outer: Ideal, inner: Ideal) -> bool:
        """``inner`` is a subset of ``outer``."""
        if inner.gen == 0:
            return True
        o = self._size(outer)
        if o == 0:
            return False
        return self._size(inner) % o == 0

    def annihilator(self, ideal: Ideal) -> Ideal:
        if ideal.gen == 0:
            return self.unit_ideal
        if not self.modulus:
            return self.zero_ideal
        return Ideal(self._normalize(self.modulus // ideal.gen))

    def intersection(self, a: Ideal, b: Ideal) -> Ideal:
        if a.gen == 0 or b.gen == 0:
            return self.zero_ideal
        return Ideal(self._normalize(a.gen * b.gen // gcd(a.gen, b.gen)))

    def ideals(self) -> list[Ideal]:
        """All ideals of a finite ring, one per divisor of the modulus."""
        n = self.modulus
        if not n:
            raise ValueError("the integers have infinitely many ideals")
        return [Ideal(self._normalize(d)) for d in range(1, n + 1) if n % d == 0]

    def is_essential(self, ideal: Ideal) -> bool:
        if ideal.gen == 0:
            return False
        if not self.modulus:
            return True
        return all(
            self.intersection(ideal, other).gen != 0
            for other in self.ideals()
            if other.gen != 0
        )


ZZ = Ring(0)


def Zmod(n: int) -> Ring:
    return Ring.mod(n)


@dataclass(frozen=True, order=True)
class Ideal:
    """Principal ideal in normal form; ``gen == 0`` is the zero ideal."""

    gen: int

    def __str__(self) -> str:
        return f"({self.gen})"


# ---------------------------------------------------------------------------
# hereditary sets and filters


class HereditarySet:
    """A downward closed, non-empty set of ideals, given by its predicate."""

    def contains(self, ring: Ring, ideal: Ideal) -> bool:
        raise NotImplementedError


class Filter:
    """An upward closed, non-empty set of ideals, given by its predicate."""

    def contains(self, ring: Ring, ideal: Ideal) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class K0(HereditarySet):
    """Only the zero ideal: the property of vanishing."""

    def contains(self, ring: Ring, ideal: Ideal) -> bool:
        return ideal.gen == 0


@dataclass(frozen=True)
class K1(HereditarySet):
    """Ideals with a non-zero annihilator (McCoy rank)."""

    def contains(self, ring: Ring, ideal: Ideal) -> bool:
        return ring.annihilator(ideal).gen != 0


@dataclass(frozen=True)
class SubsetOf(HereditarySet):
    bound: Ideal

    def contains(self, ring: Ring, ideal: Ideal) -> bool:
        return ring.contains(self.bound, ideal)


@dataclass(frozen=True)
class StrictSubsetOf(HereditarySet):
    bound: Ideal

    def __post_init__(self) -> None:
        if self.bound.gen == 0:
            raise ValueError("strict_subset_of needs a non-zero bound")

    def contains(self, ring: Ring, ideal: Ideal) -> bool:
        return ideal != self.bound and ring.contains(self.bound, ideal)


@dataclass(frozen=True)
class FromFilter(HereditarySet):
    """Ideals whose annihilator lies in ``filter``."""

    filter: Filter

    def contains(self, ring: Ring, ideal: Ideal) -> bool:
        return self.filter.contains(ring, ring.annihilator(ideal))


@dataclass(frozen=True)
class SupersetOf(Filter):
    base: Ideal

    def contains(self, ring: Ring, ideal: Ideal) -> bool:
        return ring.contains(ideal, self.base)


@dataclass(frozen=True)
class StrictSupersetOf(Filter):
    base: Ideal

    def __post_init__(self) -> None:
        if self.base.gen == 1:
            raise ValueError("strict_superset_of needs a proper base ideal")

    def contains(self, ring: Ring, ideal: Ideal) -> bool:
        return ideal != self.base and ring.contains(ideal, self.base)


@dataclass(frozen=True)
class Essential(Filter):
    def contains(self, ring: Ring, ideal: Ideal) -> bool:
        return ring.is_essential(ideal)


@dataclass(frozen=True)
class FromHereditary(Filter):
    """Ideals whose annihilator lies in ``hset``."""

    hset: HereditarySet

    def contains(self, ring: Ring, ideal: Ideal) -> bool:
        return self.hset.contains(ring, ring.annihilator(ideal))


# ---------------------------------------------------------------------------
# functional interface

RingElement = int


def ideal_from_generators(ring: Ring, gens: Iterable[int]) -> Ideal:
    return ring.ideal(gens)


def ideal_contains(ring: Ring, outer: Ideal, inner: Ideal) -> bool:
    return ring.contains(outer, inner)


def annihilator(ring: Ring, ideal: Ideal) -> Ideal:
    return ring.annihilator(ideal)


def hset_contains(ring: Ring, hset: HereditarySet, ideal: Ideal) -> bool:
    return hset.contains(ring, ideal)


def filter_contains(ring: Ring, filt: Filter, ideal: Ideal) -> bool:
    return filt.contains(ring, ideal)
