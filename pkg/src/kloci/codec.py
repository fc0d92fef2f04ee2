"""JSON encodings of rings, hereditary sets, polynomials, matrices, complexes and loci."""
from __future__ import annotations

from typing import Any

from .complexes import ChainComplex
from .jumploci import JumpLocus, VerificationReport
from .laurent import GroupRing, LaurentPoly
from .lattices import GroupHom, Sublattice
from .matrank import PolyMatrix
from .rings import (
    K0,
    K1,
    Essential,
    Filter,
    FromFilter,
    FromHereditary,
    HereditarySet,
    Ideal,
    Ring,
    StrictSubsetOf,
    StrictSupersetOf,
    SubsetOf,
    SupersetOf,
)


class InputError(ValueError):
    """Malformed or inconsistent JSON input."""


def _get(obj: dict, key: str, what: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"{what}: missing key {key!r}")
    return obj[key]


def _int(x: Any, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{what}: expected an integer, got {x!r}")
    return x


# -- rings and ideals -----------------------------------------------------------


def ring_to_json(ring: Ring) -> dict:
    return {"kind": "Z"} if not ring.modulus else {"kind": "Zmod", "n": ring.modulus}


def ring_from_json(obj: dict) -> Ring:
    kind = _get(obj, "kind", "ring")
    if kind == "Z":
        return Ring.integers()
    if kind == "Zmod":
        n = _int(_get(obj, "n", "ring"), "ring.n")
        if n < 2:
            raise InputError(f"ring: Zmod needs n >= 2, got {n}")
        return Ring.mod(n)
    raise InputError(f"ring: unknown kind {kind!r}")


def ideal_to_json(ideal: Ideal) -> dict:
    return {"gen": ideal.gen}


def _ideal(obj: dict, ring: Ring, what: str) -> Ideal:
    return ring.ideal([_int(_get(obj, "gen", what), what + ".gen")])


def hset_to_json(hset: HereditarySet) -> dict:
    if isinstance(hset, K0):
        return {"kind": "K0"}
    if isinstance(hset, K1):
        return {"kind": "K1"}
    if isinstance(hset, SubsetOf):
        return {"kind": "subset_of", "gen": hset.bound.gen}
    if isinstance(hset, StrictSubsetOf):
        return {"kind": "strict_subset_of", "gen": hset.bound.gen}
    if isinstance(hset, FromFilter):
        return {"kind": "from_filter", "filter": filter_to_json(hset.filter)}
    raise TypeError(f"cannot encode {hset!r}")


def hset_from_json(obj: dict, ring: Ring) -> HereditarySet:
    kind = _get(obj, "kind", "hset")
    try:
        if kind == "K0":
            return K0()
        if kind == "K1":
            return K1()
        if kind == "subset_of":
            return SubsetOf(_ideal(obj, ring, "hset"))
        if kind == "strict_subset_of":
            return StrictSubsetOf(_ideal(obj, ring, "hset"))
        if kind == "from_filter":
            return FromFilter(filter_from_json(_get(obj, "filter", "hset"), ring))
    except InputError:
        raise
    except ValueError as exc:
        raise InputError(f"hset: {exc}") from exc
    raise InputError(f"hset: unknown kind {kind!r}")


def filter_to_json(filt: Filter) -> dict:
    if isinstance(filt, SupersetOf):
        return {"kind": "superset_of", "gen": filt.base.gen}
    if isinstance(filt, StrictSupersetOf):
        return {"kind": "strict_superset_of", "gen": filt.base.gen}
    if isinstance(filt, Essential):
        return {"kind": "essential"}
    if isinstance(filt, FromHereditary):
        return {"kind": "from_hereditary", "hset": hset_to_json(filt.hset)}
    raise TypeError(f"cannot encode {filt!r}")


def filter_from_json(obj: dict, ring: Ring) -> Filter:
    kind = _get(obj, "kind", "filter")
    if kind == "superset_of":
        return SupersetOf(_ideal(obj, ring, "filter"))
    if kind == "strict_superset_of":
        return StrictSupersetOf(_ideal(obj, ring, "filter"))
    if kind == "essential":
        return Essential()
    if kind == "from_hereditary":
        return FromHereditary(hset_from_json(_get(obj, "hset", "filter"), ring))
    raise InputError(f"filter: unknown kind {kind!r}")


# -- polynomials, matrices, complexes ---------------------------------------------


def poly_to_json(f: LaurentPoly) -> dict:
    return {"rank": f.rank, "terms": [{"exp": list(e), "coeff": c} for e, c in f.terms]}


def poly_from_json(obj: dict, ring: Ring, rank: int | None = None) -> LaurentPoly:
    r = _int(_get(obj, "rank", "poly"), "poly.rank")
    if rank is not None and r != rank:
        raise InputError(f"poly: rank {r} does not match ambient rank {rank}")
    terms = _get(obj, "terms", "poly")
    if not isinstance(terms, list):
        raise InputError("poly.terms must be a list")
    items = []
    for t in terms:
        exp = _get(t, "exp", "term")
        if not isinstance(exp, list) or len(exp) != r:
            raise InputError(f"term exponent {exp!r} must be a list of length {r}")
        items.append(([_int(e, "exp") for e in exp], _int(_get(t, "coeff", "term"), "coeff")))
    return GroupRing(ring, r).poly(items)


def matrix_to_json(A: PolyMatrix) -> dict:
    return {
        "rows": A.nrows,
        "cols": A.ncols,
        "entries": [[poly_to_json(f) for f in row] for row in A.rows],
    }


def matrix_from_json(obj: dict, parent: GroupRing) -> PolyMatrix:
    m = _int(_get(obj, "rows", "matrix"), "matrix.rows")
    n = _int(_get(obj, "cols", "matrix"), "matrix.cols")
    entries = _get(obj, "entries", "matrix")
    if not isinstance(entries, list) or len(entries) != m or any(
        not isinstance(row, list) or len(row) != n for row in entries
    ):
        raise InputError(f"matrix entries do not have shape {m}x{n}")
    rows = [[poly_from_json(f, parent.ring, parent.rank) for f in row] for row in entries]
    return PolyMatrix.from_rows(parent, rows, n)


def complex_to_json(C: ChainComplex) -> dict:
    return {
        "lowest_index": C.lowest_index,
        "ranks": list(C.ranks),
        "differentials": [matrix_to_json(D) for D in C.differentials],
    }


def complex_from_json(obj: dict, parent: GroupRing) -> ChainComplex:
    lo = _int(_get(obj, "lowest_index", "complex"), "complex.lowest_index")
    ranks = [_int(r, "complex.ranks") for r in _get(obj, "ranks", "complex")]
    diffs = [matrix_from_json(D, parent) for D in _get(obj, "differentials", "complex")]
    try:
        return ChainComplex(parent, lo, tuple(ranks), tuple(diffs))
    except ValueError as exc:
        raise InputError(f"complex: {exc}") from exc


def infer_rank(obj: Any) -> int | None:
    """Ambient rank of the first polynomial found anywhere in ``obj``."""
    if isinstance(obj, dict):
        if "terms" in obj and "rank" in obj:
            return obj["rank"]
        values = obj.values()
    elif isinstance(obj, list):
        values = obj
    else:
        return None
    for v in values:
        r = infer_rank(v)
        if r is not None:
            return r
    return None


# -- homomorphisms, lattices, loci, reports ---------------------------------------


def hom_to_json(p: GroupHom) -> dict:
    return {"t": p.t, "s": p.s, "matrix": [list(r) for r in p.matrix]}


def hom_from_json(obj: dict) -> GroupHom:
    s = _int(_get(obj, "s", "hom"), "hom.s")
    rows = _get(obj, "matrix", "hom")
    try:
        p = GroupHom.from_rows(rows, s)
    except (TypeError, ValueError) as exc:
        raise InputError(f"hom: {exc}") from exc
    if "t" in obj and obj["t"] != p.t:
        raise InputError("hom: t does not match the number of rows")
    return p


def sublattice_to_json(L: Sublattice) -> dict:
    return {"s": L.s, "basis": [list(r) for r in L.basis]}


def sublattice_from_json(obj: dict) -> Sublattice:
    return Sublattice.span(_int(_get(obj, "s", "sublattice"), "s"), _get(obj, "basis", "sublattice"))


def locus_to_json(locus: JumpLocus) -> dict:
    return {
        "s": locus.s,
        "ell": locus.ell,
        "k_partitions": locus.k_partitions,
        "trivial_module": locus.trivial_module,
        "groups": [
            {**sublattice_to_json(g), "proper": g.is_proper()} for g in locus.groups
        ],
    }


def locus_from_json(obj: dict) -> JumpLocus:
    groups = tuple(sublattice_from_json(g) for g in _get(obj, "groups", "locus"))
    s = obj.get("s", groups[0].s if groups else None)
    if s is None:
        raise InputError("locus: cannot determine s")
    return JumpLocus(s, groups, obj.get("k_partitions"), bool(obj.get("trivial_module", False)))


def report_to_json(report: VerificationReport) -> dict:
    cx = report.first_counterexample
    return {
        "t": report.t,
        "box": report.box,
        "checked": report.checked,
        "disagreements": report.disagreements,
        "oracle_true": report.oracle_true,
        "first_counterexample": hom_to_json(cx) if cx is not None else None,
    }
