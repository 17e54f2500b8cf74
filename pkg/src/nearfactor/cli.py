"""Command line interface: ``nearfactor {check,realize,verify,search,sweep,skolem}``.

Exit codes: 0 realized / valid, 1 infeasible / no realization, 2 invalid
input or unmet preconditions, 3 internal validation failure, 4 indeterminate.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .feasibility import check_condition
from .model import (
    Infeasible,
    InvalidInput,
    LengthList,
    Mode,
    NearOneFactor,
    PreconditionViolation,
    Realization,
    from_sequence,
    to_sequence,
    validate,
)
from .oracle import SearchLimitExceeded, SearchOptions, search_realization, sweep
from .solve import (
    DEFAULT_NODE_LIMIT,
    INDETERMINATE,
    INFEASIBLE,
    METHOD_NAMES,
    SolveResult,
    solve,
)

EXIT_OK, EXIT_NO, EXIT_INVALID, EXIT_BUG, EXIT_UNDECIDED = 0, 1, 2, 3, 4


def factor_to_dict(f: NearOneFactor) -> dict:
    return f.to_dict()


def factor_from_dict(data: dict) -> NearOneFactor:
    f = NearOneFactor.from_dict(data)
    f.check()
    return f


def load_factor(path: str) -> NearOneFactor:
    # utf-8-sig strips a byte-order mark; json ignores line endings
    try:
        text = Path(path).read_text(encoding="utf-8-sig")
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read factor file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise InvalidInput("factor document must be an object")
    return factor_from_dict(data)


def format_factor(f: NearOneFactor) -> str:
    edges = " ".join(f"[{x},{y}]" for x, y in sorted(f.edges))
    return f"v={f.v} isolated={f.isolated}\nedges: {edges}"


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_check(args) -> int:
    lst = LengthList.parse(args.list)
    lst.check(Mode.CYCLIC)
    verdict = check_condition(lst)
    _emit(args, {"list": str(lst), "v": lst.v, **verdict.to_dict()}, f"{lst} (v={lst.v}): {verdict}")
    return EXIT_OK if verdict else EXIT_NO


def _result_text(res: SolveResult, show_grid: bool) -> str:
    lines = [f"verdict: {res.verdict}", f"feasibility: {res.feasibility}"]
    if res.method:
        lines.append(f"method: {res.method}")
    for step in res.trace:
        lines.append(f"  {step}")
    if res.realization is not None:
        lines.append(format_factor(res.realization.factor))
        if show_grid:
            for step in res.realization.trace:
                g = step.params.get("grid")
                if g is not None:
                    lines.append(g.render(isolated=res.realization.factor.isolated))
    return "\n".join(lines)


def cmd_realize(args) -> int:
    lst = LengthList.parse(args.list)
    res = solve(lst, args.method, args.node_limit)
    _emit(args, res.to_dict() | {"list": str(lst)}, _result_text(res, args.show_grid))
    if res.verdict == INFEASIBLE:
        return EXIT_NO
    if res.verdict == INDETERMINATE:
        return EXIT_UNDECIDED
    return EXIT_OK if res.has_realization else EXIT_NO


def cmd_verify(args) -> int:
    lst = LengthList.parse(args.list)
    f = load_factor(args.factor)
    mode = Mode.LINEAR if args.linear else Mode.CYCLIC
    lst.check(mode)
    verdict = validate(f, lst, mode)
    kind = verdict.kind.value if verdict.kind else None
    text = f"valid ({kind})" if verdict else f"invalid: {verdict.reason}"
    _emit(args, {"valid": verdict.ok, "reason": verdict.reason, "kind": kind}, text)
    return EXIT_OK if verdict else EXIT_NO


def cmd_search(args) -> int:
    lst = LengthList.parse(args.list)
    mode = Mode.LINEAR if args.linear else Mode.CYCLIC
    if args.isolated is not None and not 0 <= args.isolated < lst.v:
        raise InvalidInput(f"--isolated must lie in 0..{lst.v - 1}")
    opts = SearchOptions(mode, args.isolated, args.node_limit)
    try:
        r = search_realization(lst, opts)
    except SearchLimitExceeded as exc:
        _emit(args, {"found": None, "nodes": exc.nodes}, f"indeterminate: {exc}")
        return EXIT_UNDECIDED
    if r is None:
        _emit(args, {"found": False}, f"no {mode.value} realization of {lst}")
        return EXIT_NO
    payload = {"found": True, "kind": r.kind.value, "factor": factor_to_dict(r.factor)}
    _emit(args, payload, f"{r.kind.value} realization of {lst}\n{format_factor(r.factor)}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    report = sweep(args.max_v, args.workers, args.verify_infeasible, args.node_limit)
    payload = {"ok": report.ok, "wall_time": round(report.wall_time, 3), "rows": report.to_dict()}
    lines = [report.summary(), f"wall time {report.wall_time:.2f}s"]
    for row in report.rows.values():
        lines += [f"counterexample v={row.v}: {c}" for c in row.counterexamples]
        lines += [f"undecided v={row.v}: {c}" for c in row.failures]
    lines.append("conjecture holds on every order checked" if report.ok else "SWEEP FAILED")
    _emit(args, payload, "\n".join(lines))
    if any(r.counterexamples for r in report.rows.values()):
        return EXIT_NO
    return EXIT_OK if report.ok else EXIT_UNDECIDED


def _word_payload(r: Realization) -> tuple[dict, str]:
    seq = to_sequence(r)
    payload = {"word": list(seq.slots), "kind": r.kind.value, "list": str(r.list), "factor": factor_to_dict(r.factor)}
    return payload, f"{seq}  {r.kind.value} realization of {r.list}\n{format_factor(r.factor)}"


def cmd_skolem(args) -> int:
    if args.word:
        r = from_sequence(int(s) for s in args.word.replace("(", "").replace(")", "").split(","))
        payload, text = _word_payload(r)
        _emit(args, payload, text)
        return EXIT_OK
    if args.source is None:
        raise InvalidInput("give a list, a factor file or --word")
    if os.path.exists(args.source):
        f = load_factor(args.source)
        payload, text = _word_payload(Realization.linear(f))
        _emit(args, payload, text)
        return EXIT_OK
    lst = LengthList.parse(args.source)
    opts = SearchOptions(Mode.LINEAR, args.isolated, args.node_limit)
    try:
        r = search_realization(lst, opts)
    except SearchLimitExceeded as exc:
        print(f"indeterminate: {exc}")
        return EXIT_UNDECIDED
    if r is None:
        _emit(args, {"word": None}, f"no linear realization of {lst}")
        return EXIT_NO
    payload, text = _word_payload(r)
    _emit(args, payload, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nearfactor", description="Edge-length realizations of near 1-factors of K_v.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.set_defaults(func=fn)
        return sp

    sp = add("check", cmd_check, "test the divisor condition")
    sp.add_argument("list", help="length list such as 1^2,4^3,6")

    sp = add("realize", cmd_realize, "construct a cyclic realization")
    sp.add_argument("list")
    sp.add_argument("--method", choices=METHOD_NAMES, default="auto")
    sp.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    sp.add_argument("--show-grid", action="store_true", help="print the vertex grid of grid constructions")

    sp = add("verify", cmd_verify, "check a factor file against a list")
    sp.add_argument("--list", required=True)
    sp.add_argument("factor", help="JSON document with v, edges, isolated")
    sp.add_argument("--linear", action="store_true", help="compare plain differences instead of lengths")

    sp = add("search", cmd_search, "exhaustive search")
    sp.add_argument("list")
    sp.add_argument("--linear", action="store_true")
    sp.add_argument("--isolated", type=int)
    sp.add_argument("--node-limit", type=int)

    sp = add("sweep", cmd_sweep, "check every list up to an order")
    sp.add_argument("--max-v", type=int, required=True)
    sp.add_argument("--workers", type=int, default=None, help="default from NEARFACTOR_WORKERS or 1")
    sp.add_argument("--verify-infeasible", action="store_true")
    sp.add_argument("--node-limit", type=int)

    sp = add("skolem", cmd_skolem, "convert between slot words and linear factors")
    sp.add_argument("source", nargs="?", help="a list (searched linearly) or a factor file")
    sp.add_argument("--word", help="slot word such as 5,1,1,1,1,5,0")
    sp.add_argument("--isolated", type=int)
    sp.add_argument("--node-limit", type=int)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_NO
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_BUG
    except (InvalidInput, PreconditionViolation, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


__all__ = ["build_parser", "factor_from_dict", "factor_to_dict", "load_factor", "main"]


if __name__ == "__main__":
    sys.exit(main())
