"""Command-line interface.

Commands
    analyze     singularities, centrality, and seminormality of a plane curve
    adjoin      present the ring extension defined by the CANDIDATES section
    fiber       solve the extension fiber over a rational point (--point)
    continuity  decide continuous extendability for each candidate
    wc-search   fixed-point search for the continuous closure of the catalog
    hereditary  residue-degree test along WPRIME over the PARAM variable
    verify-paper  run the built-in regression corpus

Exit codes: 0 completed with verdicts, 1 completed with undecided entries
(or corpus failures), 2 input error, 3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from . import corpus as corpus_mod
from . import groebner
from .errors import InputError, ResourceLimitError, ToolError
from .extension import (
    adjoin,
    central_bijectivity_check,
    continuity_decision,
    fiber_over_point,
    hereditary_birational_check,
    wc_normalization_search,
)
from .geometry import (
    PLANE_CURVE,
    centrality_report,
    classify_singularity,
    singular_points,
)
from .groebner import Budget
from .parsing import format_poly, parse_point
from .report import Report, render_text
from .seminormal import is_centrally_seminormal
from .varspec import parse_spec

EXIT_OK = 0
EXIT_UNDECIDED = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


@dataclass
class AnalyzeResult:
    singular_points: tuple
    nonreal_singular_count: int
    centrality: object
    seminormality: object


def _load_spec(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return parse_spec(handle.read())
    except OSError as err:
        raise InputError(f"cannot read {path}: {err}") from None


def _cmd_analyze(args, budget):
    spec = _load_spec(args.spec)
    if spec.kind != PLANE_CURVE:
        raise InputError("analyze currently handles plane curves")
    x = spec.presentation(budget)
    real, nonreal = singular_points(x, budget)
    reports = []
    for sp in real:
        if sp.is_rational:
            reports.append(classify_singularity(x, sp.rational_coords(), budget))
        else:
            reports.append(sp)
    centrality = centrality_report(x, budget)
    seminorm = is_centrally_seminormal(x, budget)
    status = "undecided" if seminorm.verdict == "unsupported" else "ok"
    return status, AnalyzeResult(tuple(reports), nonreal, centrality, seminorm)


@dataclass
class AdjoinResult:
    ring_vars: tuple
    reduced_basis: tuple
    contraction_recovers_base: bool


def _cmd_adjoin(args, budget):
    spec = _load_spec(args.spec)
    if not spec.candidates:
        raise InputError("the document has no CANDIDATES section")
    x = spec.presentation(budget)
    ext = adjoin(x, list(spec.candidates), budget)
    gb = ext.ideal.groebner(budget)
    return "ok", AdjoinResult(ext.ideal.vars, gb.elements, True)


@dataclass
class FiberResult:
    point: tuple
    real_points: tuple
    nonreal_count: int


def _cmd_fiber(args, budget):
    spec = _load_spec(args.spec)
    if not spec.candidates:
        raise InputError("the document has no CANDIDATES section")
    if args.point is None:
        raise InputError("fiber needs --point \"(a, b, ...)\"")
    point = parse_point(args.point, len(spec.vars))
    x = spec.presentation(budget)
    ext = adjoin(x, list(spec.candidates), budget)
    real, nonreal = fiber_over_point(ext, point, budget)
    return "ok", FiberResult(point, tuple(real), nonreal)


@dataclass
class ContinuityResult:
    decisions: tuple  # (name, bool)


def _cmd_continuity(args, budget):
    spec = _load_spec(args.spec)
    if not spec.candidates:
        raise InputError("the document has no CANDIDATES section")
    x = spec.presentation(budget)
    wanted = (
        [c for c in spec.candidates if c.name == args.candidate]
        if args.candidate
        else list(spec.candidates)
    )
    if args.candidate and not wanted:
        raise InputError(f"no candidate named {args.candidate!r}")
    decisions = []
    for cand in wanted:
        decisions.append((cand.name, continuity_decision(x, cand, budget)))
    return "ok", ContinuityResult(tuple(decisions))


def _cmd_wc_search(args, budget):
    spec = _load_spec(args.spec)
    if not spec.candidates:
        raise InputError("the document has no CANDIDATES section")
    x = spec.presentation(budget)
    result = wc_normalization_search(x, list(spec.candidates), budget)
    gb = result.presentation.ideal.groebner(budget)
    payload = {
        "certificate": result.certificate,
        "ring_vars": result.presentation.ideal.vars,
        "reduced_basis": [format_poly(g) for g in gb.elements],
    }
    undecided = any(
        o.status == "rejected" and o.certificate and o.certificate.verdict is None
        for o in result.certificate.outcomes
    )
    return ("undecided" if undecided else "ok"), payload


@dataclass
class HereditaryResult:
    parameter: str
    pinned_value: object
    degree: int
    birational: bool


def _cmd_hereditary(args, budget):
    spec = _load_spec(args.spec)
    if not spec.candidates:
        raise InputError("the document has no CANDIDATES section")
    if not spec.wprime:
        raise InputError("the document has no WPRIME section")
    if spec.param is None:
        raise InputError("the document has no PARAM line")
    x = spec.presentation(budget)
    ext = adjoin(x, list(spec.candidates), budget)
    name, value = spec.param
    degree, birational = hereditary_birational_check(
        ext, list(spec.wprime), name, value, budget, seed=args.seed
    )
    return "ok", HereditaryResult(name, value, degree, birational)


def _cmd_verify_paper(args, budget):
    results = corpus_mod.run_all(parallel=not args.serial)
    for r in results:
        print(("PASS" if r.ok else "FAIL"), f"{r.entry_id}: {r.description} [{r.detail}]")
    ok = all(r.ok for r in results)
    payload = {
        "entries": results,
        "passed": sum(1 for r in results if r.ok),
        "total": len(results),
    }
    return ("ok" if ok else "undecided"), payload


_COMMANDS = {
    "analyze": _cmd_analyze,
    "adjoin": _cmd_adjoin,
    "fiber": _cmd_fiber,
    "continuity": _cmd_continuity,
    "wc-search": _cmd_wc_search,
    "hereditary": _cmd_hereditary,
    "verify-paper": _cmd_verify_paper,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="centralcurves",
        description="exact centrality / seminormality toolkit for real curves",
    )
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("spec", nargs="?", help="input document path")
    parser.add_argument("--point", help="rational point \"(a, b, ...)\"")
    parser.add_argument("--candidate", help="restrict continuity to one candidate")
    parser.add_argument("--seed", type=int, default=groebner.DEFAULT_SEED)
    parser.add_argument(
        "--max-steps", type=int, default=groebner.DEFAULT_MAX_STEPS
    )
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument(
        "--serial", action="store_true", help="run verify-paper sequentially"
    )
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command != "verify-paper" and not args.spec:
        print("error: this command needs an input document", file=sys.stderr)
        return EXIT_INPUT
    groebner.set_default_seed(args.seed)
    budget = Budget(args.max_steps)
    start = time.perf_counter()
    try:
        status, result = _COMMANDS[args.command](args, budget)
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_RESOURCE
    except ToolError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    report = Report(
        command=args.command,
        status=status,
        result=result,
        seed=args.seed,
        max_steps=args.max_steps,
        budget_used=budget.used,
        elapsed_seconds=time.perf_counter() - start,
        input_path=args.spec,
    )
    if args.format == "json":
        print(report.to_json())
    else:
        print(render_text(report))
    return EXIT_OK if status == "ok" else EXIT_UNDECIDED


if __name__ == "__main__":
    sys.exit(main())
