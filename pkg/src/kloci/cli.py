"""Command line front end: one JSON job in, one JSON document out.

Exit codes: 0 success, 1 verification found a disagreement, 2 bad input,
3 a size limit (support cap or box budget) was hit.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import codec
from .complexes import betti_jump_locus, k_betti, validate_complex, verify_betti_locus
from .jumploci import (
    DEFAULT_BUDGET,
    METHODS,
    BudgetExceeded,
    multi_module_jump_locus,
    verify_locus,
)
from .laurent import GroupRing
from .matrank import k_rank, mccoy_rank, mccoy_rank_direct, rank_jump_locus
from .partitions import DEFAULT_MAX_SUPPORT, SupportTooLarge
from .rings import K0

COMMANDS = (
    "rank",
    "mccoy-rank",
    "locus-module",
    "locus-matrix",
    "betti",
    "locus-betti",
    "verify-module",
    "verify-betti",
)


class Options(argparse.Namespace):
    max_support: int
    budget: int
    prune: bool
    method: str


def _param(job: dict, key: str, default: Any = None, minimum: int | None = None) -> int:
    if key not in job:
        if default is None:
            raise codec.InputError(f"job: missing parameter {key!r}")
        return default
    val = codec._int(job[key], key)
    if minimum is not None and val < minimum:
        raise codec.InputError(f"job: {key} must be >= {minimum}")
    return val


def _parent(job: dict) -> GroupRing:
    ring = codec.ring_from_json(codec._get(job, "ring", "job"))
    s = job.get("s")
    if s is None:
        s = codec.infer_rank({k: v for k, v in job.items() if k not in ("ring", "hset")})
    if s is None:
        raise codec.InputError("job: cannot determine the ambient rank; pass \"s\"")
    return GroupRing(ring, codec._int(s, "s"))


def _modules(job: dict, parent: GroupRing) -> list[list]:
    if "modules" in job:
        return [[codec.poly_from_json(f, parent.ring, parent.rank) for f in m] for m in job["modules"]]
    polys = codec._get(job, "polys", "job")
    return [[codec.poly_from_json(f, parent.ring, parent.rank) for f in polys]]


def _matrices(job: dict, parent: GroupRing) -> list:
    if "matrices" in job:
        return [codec.matrix_from_json(m, parent) for m in job["matrices"]]
    return [codec.matrix_from_json(codec._get(job, "matrix", "job"), parent)]


def run(job: dict, opts: Options) -> tuple[dict, int]:
    """Execute one job; returns the JSON result and the exit code."""
    if not isinstance(job, dict):
        raise codec.InputError("job must be a JSON object")
    command = codec._get(job, "command", "job")
    if command not in COMMANDS:
        raise codec.InputError(f"unknown command {command!r}")
    parent = _parent(job)
    hset = codec.hset_from_json(job["hset"], parent.ring) if "hset" in job else K0()
    kw = dict(method=opts.method, max_support=opts.max_support)

    if command == "rank":
        (A,) = _matrices(job, parent)
        return {"rank": k_rank(A, hset)}, 0
    if command == "mccoy-rank":
        (A,) = _matrices(job, parent)
        return {"rank": mccoy_rank(A), "direct": mccoy_rank_direct(A)}, 0
    if command in ("locus-module", "verify-module"):
        modules = _modules(job, parent)
        locus = multi_module_jump_locus(modules, hset, parent=parent, prune=opts.prune, **kw)
        out = codec.locus_to_json(locus)
        if command == "locus-module":
            return out, 0
        report = verify_locus(
            modules,
            hset,
            _param(job, "t", 1, 1),
            _param(job, "box", 2, 1),
            parent=parent,
            locus=locus,
            budget=opts.budget,
        )
        out["verified"] = codec.report_to_json(report)
        return out, 0 if report.ok else 1
    if command == "locus-matrix":
        As = _matrices(job, parent)
        locus = rank_jump_locus(As, hset, _param(job, "q", 0, 0), parent=parent, prune=opts.prune, **kw)
        out = codec.locus_to_json(locus)
        out["ranks"] = [k_rank(A, hset) for A in As]
        return out, 0

    C = codec.complex_from_json(codec._get(job, "complex", "job"), parent)
    out: dict[str, Any] = {"valid": validate_complex(C)}
    if command == "betti":
        ks = [_param(job, "k")] if "k" in job else list(C.indices())
        out["betti"] = [{"k": k, "value": k_betti(C, hset, k)} for k in ks]
        return out, 0
    k, q = _param(job, "k"), _param(job, "q", 0, 0)
    locus = betti_jump_locus(C, hset, k, q, prune=opts.prune, **kw)
    out.update(codec.locus_to_json(locus))
    if command == "locus-betti":
        return out, 0
    report = verify_betti_locus(
        C, hset, k, q, _param(job, "t", 1, 1), _param(job, "box", 2, 1), locus=locus, budget=opts.budget
    )
    out["verified"] = codec.report_to_json(report)
    return out, 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kloci", description=__doc__.splitlines()[0])
    ap.add_argument("--input", default="-", help="JSON job file (default: stdin)")
    ap.add_argument(
        "--threads",
        type=int,
        default=1,
        help="worker count; accepted for interface stability, work currently runs in one thread",
    )
    ap.add_argument("--max-support", type=int, default=DEFAULT_MAX_SUPPORT, dest="max_support")
    ap.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max homomorphisms in a box")
    ap.add_argument("--no-prune", action="store_false", dest="prune")
    ap.add_argument("--method", choices=METHODS, default="partitions")
    return ap


def main(argv: list[str] | None = None) -> int:
    opts = build_parser().parse_args(argv, namespace=Options())
    if opts.threads < 1:
        print("kloci: --threads must be positive", file=sys.stderr)
        return 2
    try:
        if opts.input == "-":
            text = sys.stdin.read()
        else:
            with open(opts.input, encoding="utf-8") as fh:
                text = fh.read()
        job = json.loads(text)
        result, code = run(job, opts)
    except (SupportTooLarge, BudgetExceeded) as exc:
        print(f"kloci: limit exceeded: {exc}", file=sys.stderr)
        return 3
    except (OSError, json.JSONDecodeError, ValueError, TypeError) as exc:
        print(f"kloci: bad input: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(json.dumps(result, sort_keys=True) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
