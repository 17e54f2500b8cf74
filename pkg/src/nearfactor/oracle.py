"""Exhaustive backtracking search for realizations, and the small-order sweep.

The search always extends the least uncovered vertex ``u``: it either pairs
``u`` with ``u +- d`` for some remaining length ``d`` or declares ``u``
isolated.  Failed states (covered set, remaining counts, isolated flag) are
memoized, which keeps exhaustive refutations cheap at desk-scale orders.
"""

from __future__ import annotations

import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterator

from .feasibility import check_condition
from .model import Kind, LengthList, Mode, NearOneFactor, Realization, Step, translate, validate

WORKERS_ENV = "NEARFACTOR_WORKERS"


class SearchLimitExceeded(RuntimeError):
    """The node budget ran out before the search was decided."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"search undecided after {nodes} nodes")


@dataclass(frozen=True)
class SearchOptions:
    mode: Mode = Mode.CYCLIC
    required_isolated: int | None = None
    node_limit: int | None = None
    # pin the isolated vertex to 0 in cyclic mode; sound because translation preserves lengths
    normalize: bool = False


def search_realization(lst: LengthList, opts: SearchOptions = SearchOptions()) -> Realization | None:
    """A realization of ``lst`` or None if none exists; deterministic."""
    mode = Mode(opts.mode)
    lst.check(mode)
    v = lst.v
    if opts.required_isolated is not None and not 0 <= opts.required_isolated < v:
        raise ValueError(f"required_isolated must lie in 0..{v - 1}")
    cyclic = mode is Mode.CYCLIC
    lengths = [d for d, _ in lst.items]
    counts = [m for _, m in lst.items]
    weights = []
    w = 1
    for m in counts:
        weights.append(w)
        w *= m + 1
    full = (1 << v) - 1
    limit = opts.node_limit

    pinned = opts.required_isolated
    if pinned is None and opts.normalize and cyclic:
        pinned = 0
    used0 = 0 if pinned is None else 1 << pinned
    iso_free0 = pinned is None

    failed: set[int] = set()
    edges: list[tuple[int, int]] = []
    iso_box = [pinned]
    nodes = 0
    k = len(lengths)
    vbits = v + 1

    def dfs(used: int, ckey: int, iso_free: bool) -> bool:
        nonlocal nodes
        if used == full:
            return True
        key = (ckey << vbits) | (iso_free << v) | used
        if key in failed:
            return False
        nodes += 1
        if limit is not None and nodes > limit:
            raise SearchLimitExceeded(nodes)
        low = ~used & (used + 1)
        u = low.bit_length() - 1
        for i in range(k):
            if not counts[i]:
                continue
            d = lengths[i]
            p1 = u + d
            if cyclic:
                p1 %= v
                p2 = (u - d) % v
            else:
                p2 = -1
            for p in (p1, p2):
                if p < 0 or p >= v:
                    continue
                bit = 1 << p
                if used & bit:
                    continue
                counts[i] -= 1
                edges.append((u, p))
                ok = dfs(used | low | bit, ckey - weights[i], iso_free)
                counts[i] += 1
                if ok:
                    return True
                edges.pop()
        if iso_free:
            iso_box[0] = u
            if dfs(used | low, ckey, False):
                return True
            iso_box[0] = None
        failed.add(key)
        return False

    ckey0 = sum(m * wt for m, wt in zip(counts, weights))
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * v + 100))
    try:
        found = dfs(used0, ckey0, iso_free0)
    finally:
        sys.setrecursionlimit(old)
    if not found:
        return None
    f = NearOneFactor.build(v, edges, iso_box[0])
    step = Step("oracle", {"mode": mode.value, "nodes": nodes, "constructive": False})
    if cyclic:
        r = Realization(f, Kind.CYCLIC, lst, (step,))
    else:
        r = Realization.linear(f, lst, (step,))
    chk = validate(f, lst, mode)
    if not chk:
        raise AssertionError(f"search returned an invalid factor: {chk.reason}")
    return r


def recenter(r: Realization, isolated: int) -> Realization:
    """Rotate a cyclic realization so its isolated vertex becomes ``isolated``."""
    f = r.factor
    g = (isolated - f.isolated) % f.v
    moved = translate(f, g)
    v = f.v
    f2 = NearOneFactor.build(v, ((x % v, y % v) for x, y in moved.edges), moved.isolated % v)
    return Realization(f2, r.kind, r.list, r.trace)


def enumerate_lists(n: int) -> Iterator[LengthList]:
    """All multisets of n lengths from 1..n, lexicographic."""
    if n < 1:
        raise ValueError("n must be positive")
    for combo in combinations_with_replacement(range(1, n + 1), n):
        yield LengthList.of(combo)


@dataclass
class SweepRow:
    v: int
    total: int = 0
    feasible: int = 0
    realized: int = 0
    violating: int = 0
    verified_unrealizable: int = 0
    counterexamples: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def holds(self) -> bool:
        return self.realized == self.feasible and not self.counterexamples and not self.failures

    def merge(self, other: "SweepRow") -> "SweepRow":
        assert self.v == other.v
        return SweepRow(
            self.v,
            self.total + other.total,
            self.feasible + other.feasible,
            self.realized + other.realized,
            self.violating + other.violating,
            self.verified_unrealizable + other.verified_unrealizable,
            self.counterexamples + other.counterexamples,
            self.failures + other.failures,
            self.seconds + other.seconds,
        )


@dataclass
class SweepReport:
    rows: dict[int, SweepRow] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.rows.values())

    def merge(self, other: "SweepReport") -> "SweepReport":
        rows = dict(self.rows)
        for v, row in other.rows.items():
            rows[v] = rows[v].merge(row) if v in rows else row
        return SweepReport(rows, self.wall_time + other.wall_time)

    def summary(self) -> str:
        head = f"{'v':>4} {'lists':>8} {'feasible':>9} {'realized':>9} {'violating':>10} {'refuted':>8} {'bad':>4} {'sec':>8}"
        lines = [head]
        for v in sorted(self.rows):
            r = self.rows[v]
            bad = len(r.counterexamples) + len(r.failures)
            lines.append(
                f"{v:>4} {r.total:>8} {r.feasible:>9} {r.realized:>9} {r.violating:>10}"
                f" {r.verified_unrealizable:>8} {bad:>4} {r.seconds:>8.2f}"
            )
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            str(v): {
                "total": r.total,
                "feasible": r.feasible,
                "realized": r.realized,
                "violating": r.violating,
                "verified_unrealizable": r.verified_unrealizable,
                "counterexamples": r.counterexamples,
                "failures": r.failures,
                "seconds": round(r.seconds, 3),
            }
            for v, r in sorted(self.rows.items())
        }


def _sweep_chunk(args: tuple[int, list[tuple[int, ...]], bool, int | None]) -> SweepRow:
    v, combos, verify_infeasible, node_limit = args
    row = SweepRow(v)
    t0 = time.perf_counter()
    feasible_opts = SearchOptions(node_limit=node_limit, normalize=True)
    refute_opts = SearchOptions(node_limit=node_limit, normalize=True)
    for combo in combos:
        lst = LengthList.of(combo)
        row.total += 1
        feasible = bool(check_condition(lst))
        if feasible:
            row.feasible += 1
        else:
            row.violating += 1
            if not verify_infeasible:
                continue
        try:
            found = search_realization(lst, feasible_opts if feasible else refute_opts)
        except SearchLimitExceeded as exc:
            row.failures.append(f"{lst}: {exc}")
            continue
        if feasible:
            if found is None:
                row.counterexamples.append(str(lst))
            else:
                row.realized += 1
        elif found is None:
            row.verified_unrealizable += 1
        else:
            row.counterexamples.append(f"{lst} violates the divisor condition yet was realized")
    row.seconds = time.perf_counter() - t0
    return row


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def sweep(
    v_max: int,
    workers: int | None = None,
    verify_infeasible: bool = False,
    node_limit: int | None = None,
    v_min: int = 3,
    chunk: int = 2000,
) -> SweepReport:
    """Check every list of every odd order v_min..v_max against the divisor condition.

    Feasible lists must be realized; with ``verify_infeasible`` the violating
    ones must also be refuted by exhaustive search.
    """
    if v_max < 3 or v_max % 2 == 0:
        raise ValueError("v_max must be odd and at least 3")
    workers = default_workers() if workers is None else max(1, workers)
    jobs = []
    for v in range(max(3, v_min | 1), v_max + 1, 2):
        n = (v - 1) // 2
        combos = list(combinations_with_replacement(range(1, n + 1), n))
        for s in range(0, len(combos), chunk):
            jobs.append((v, combos[s : s + chunk], verify_infeasible, node_limit))
    report = SweepReport()
    t0 = time.perf_counter()
    if workers == 1:
        results = map(_sweep_chunk, jobs)
        for row in results:
            report = report.merge(SweepReport({row.v: row}))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for row in pool.map(_sweep_chunk, jobs):
                report = report.merge(SweepReport({row.v: row}))
    report.wall_time = time.perf_counter() - t0
    return report
