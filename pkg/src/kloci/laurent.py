"""Sparse Laurent polynomials, i.e. elements of the group ring ``R[Z^s]``.

A polynomial is a finite map from exponent vectors (tuples of ``s`` ints,
negative entries allowed) to nonzero ring elements.  Values are immutable
and hashable; terms are kept in lexicographic order of exponents so the
``repr`` and the JSON form are canonical.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .lattices import GroupHom
from .rings import HereditarySet, Ideal, Ring

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class GroupRing:
    """``R[Z^rank]``; ``rank == 0`` gives ``R`` itself."""

    ring: Ring
    rank: int

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")

    def __str__(self) -> str:
        return f"{self.ring}[Z^{self.rank}]"

    def poly(self, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = ()) -> LaurentPoly:
        """Polynomial from ``{exponent: coefficient}``; repeated exponents add up."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.rank:
                raise ValueError(f"exponent {exp} does not have length {self.rank}")
            acc[exp] = acc.get(exp, 0) + int(c)
        return LaurentPoly._make(self, acc)

    def const(self, c: int) -> LaurentPoly:
        return self.poly({(0,) * self.rank: c})

    def monomial(self, exp: Sequence[int], coeff: int = 1) -> LaurentPoly:
        return self.poly({tuple(exp): coeff})

    @property
    def zero(self) -> LaurentPoly:
        return LaurentPoly._make(self, {})

    @property
    def one(self) -> LaurentPoly:
        return self.const(1)

    def gens(self) -> tuple[LaurentPoly, ...]:
        """The variables ``x_1, ..., x_s``."""
        return tuple(
            self.monomial([int(i == j) for j in range(self.rank)]) for i in range(self.rank)
        )


class LaurentPoly:
    __slots__ = ("parent", "_terms", "_hash")

    parent: GroupRing
    _terms: tuple[tuple[Exponent, int], ...]

    def __init__(self, parent: GroupRing, terms: Mapping[Exponent, int]):
        p = parent.poly(terms)
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "_terms", p._terms)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _make(cls, parent: GroupRing, acc: Mapping[Exponent, int]) -> LaurentPoly:
        # acc is trusted: exponents already have the right length
        ring = parent.ring
        terms = []
        for e in sorted(acc):
            c = ring.reduce(acc[e])
            if c:
                terms.append((e, c))
        obj = object.__new__(cls)
        object.__setattr__(obj, "parent", parent)
        object.__setattr__(obj, "_terms", tuple(terms))
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- basic protocol ---------------------------------------------------

    @property
    def ring(self) -> Ring:
        return self.parent.ring

    @property
    def rank(self) -> int:
        return self.parent.rank

    @property
    def terms(self) -> tuple[tuple[Exponent, int], ...]:
        return self._terms

    def as_dict(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def coefficients(self) -> list[int]:
        return [c for _, c in self._terms]

    def support(self) -> frozenset[Exponent]:
        return frozenset(e for e, _ in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.parent.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.parent == other.parent and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.parent, self._terms)))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, c in reversed(self._terms):
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out).replace("+ -", "- ")

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.parent != self.parent:
                raise ValueError(f"cannot combine elements of {self.parent} and {other.parent}")
            return other
        if isinstance(other, int):
            return self.parent.const(other)
        return NotImplemented

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly._make(self.parent, acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._make(self.parent, {e: -c for e, c in self._terms})

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Exponent, int] = {}
        for a, c in self._terms:
            for b, d in other._terms:
                e = tuple(x + y for x, y in zip(a, b))
                acc[e] = acc.get(e, 0) + c * d
        return LaurentPoly._make(self.parent, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._terms) != 1 or self._terms[0][1] not in (1, self.ring.reduce(-1)):
                raise ValueError("only signed monomials are units")
            (e, c), = self._terms
            return LaurentPoly._make(self.parent, {tuple(-x for x in e): c}) ** (-k)
        out = self.parent.one
        for _ in range(k):
            out = out * self
        return out

    # -- group ring structure -----------------------------------------------

    def coefficient_ideal(self) -> Ideal:
        return self.ring.ideal(self.coefficients())

    def augmentation(self) -> int:
        return self.ring.reduce(sum(self.coefficients()))

    def induced(self, p: GroupHom, target: GroupRing | None = None) -> LaurentPoly:
        """Image under the ring map induced by ``p: Z^s -> Z^t``."""
        if p.s != self.rank:
            raise ValueError(f"homomorphism expects s={p.s}, polynomial lives in rank {self.rank}")
        if target is None:
            target = GroupRing(self.ring, p.t)
        elif target.rank != p.t or target.ring != self.ring:
            raise ValueError(f"target {target} does not match homomorphism with t={p.t}")
        acc: dict[Exponent, int] = {}
        for a, c in self._terms:
            b = p(a)
            acc[b] = acc.get(b, 0) + c
        return LaurentPoly._make(target, acc)


# ---------------------------------------------------------------------------


def poly_add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def poly_mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def support(X: Iterable[LaurentPoly]) -> list[Exponent]:
    """Union of supports, sorted lexicographically."""
    out: set[Exponent] = set()
    for f in X:
        out.update(f.support())
    return sorted(out)


def coefficient_ideal(X: Iterable[LaurentPoly], ring: Ring | None = None) -> Ideal:
    X = list(X)
    if ring is None:
        if not X:
            return Ideal(0)
        ring = X[0].ring
    return ring.ideal(c for f in X for c in f.coefficients())


def is_k_set(X: Iterable[LaurentPoly], hset: HereditarySet, ring: Ring | None = None) -> bool:
    X = list(X)
    if ring is None:
        if not X:
            # the empty set generates the zero ideal, which every hereditary set holds
            return True
        ring = X[0].ring
    return hset.contains(ring, coefficient_ideal(X, ring))


def induced_map(p: GroupHom, f: LaurentPoly) -> LaurentPoly:
    return f.induced(p)


def augmentation(f: LaurentPoly) -> int:
    return f.augmentation()
