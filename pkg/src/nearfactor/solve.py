"""Dispatcher: feasibility first, then the constructive family that fits, then search."""

from __future__ import annotations

from dataclasses import dataclass, field

from .blocks import patterned_starter, realize_constant
from .feasibility import FeasibilityVerdict, check_condition
from .model import (
    Kind,
    LengthList,
    Mode,
    Realization,
    Step,
    WrongSolver,
    validate,
)
from .onetwot import METHODS as METHODS_12T
from .onetwot import realize_12t
from .oracle import SearchLimitExceeded, SearchOptions, search_realization
from .two import realize_two

REALIZED = "realized"
INFEASIBLE = "infeasible"
UNSUPPORTED = "unsupported-constructively"
INDETERMINATE = "indeterminate"

METHOD_NAMES = ("auto", "constant", "starter", "two", *METHODS_12T, "oracle")
DEFAULT_NODE_LIMIT = 1_000_000


class ValidationFailure(AssertionError):
    """A construction returned a factor that does not realize its list."""


@dataclass(frozen=True)
class SolveResult:
    verdict: str
    feasibility: FeasibilityVerdict
    realization: Realization | None = None
    trace: tuple[Step, ...] = field(default=())
    method: str | None = None

    @property
    def has_realization(self) -> bool:
        return self.realization is not None

    def to_dict(self) -> dict:
        out: dict = {
            "verdict": self.verdict,
            "method": self.method,
            "feasibility": self.feasibility.to_dict(),
            "trace": [step_to_dict(s) for s in self.trace],
        }
        if self.realization is not None:
            out["factor"] = self.realization.factor.to_dict()
        return out


def step_to_dict(s: Step) -> dict:
    params = {k: (list(v) if isinstance(v, tuple) else v) for k, v in s.params.items() if k != "grid"}
    return {"name": s.name, "params": params, "kind": s.kind}


def _split_12t(lst: LengthList) -> tuple[int, int, int, int]:
    """(a, b, t, c) when the lengths are 1, 2 and a single t >= 3."""
    big = [x for x in lst.underlying_set if x > 2]
    if len(big) != 1:
        raise WrongSolver(f"{lst} is not of the form {{1^a, 2^b, t^c}} with one t >= 3")
    t = big[0]
    return lst.multiplicity(1), lst.multiplicity(2), t, lst.multiplicity(t)


def _as_cyclic(r: Realization, lst: LengthList) -> Realization:
    if r.kind is Kind.CYCLIC:
        return r
    return Realization(r.factor, Kind.CYCLIC, lst, r.trace)


def _run(method: str, lst: LengthList) -> Realization:
    s = lst.underlying_set
    if method == "constant":
        if len(s) != 1:
            raise WrongSolver("constant needs a single distinct length")
        return realize_constant(s[0], lst.n)
    if method == "starter":
        if s != tuple(range(1, lst.n + 1)):
            raise WrongSolver("starter needs the list {1,2,...,n}")
        return patterned_starter(lst.n)
    if method == "two":
        if len(s) != 2:
            raise WrongSolver("two needs exactly two distinct lengths")
        (x, a), (y, b) = lst.items
        return realize_two(x, a, y, b)
    if method in METHODS_12T:
        a, b, t, c = _split_12t(lst)
        return _as_cyclic(METHODS_12T[method](a, b, t, c), lst)
    raise ValueError(f"unknown method {method!r}")


def _auto_method(lst: LengthList) -> str | None:
    s = lst.underlying_set
    if len(s) == 1:
        return "constant"
    if s == tuple(range(1, lst.n + 1)):
        return "starter"
    if len(s) == 2:
        return "two"
    if len(s) == 3 and s[:2] == (1, 2):
        return "12t"
    return None


def _gate(r: Realization, lst: LengthList) -> Realization:
    chk = validate(r.factor, lst, Mode.CYCLIC)
    if not chk:
        raise ValidationFailure(f"{r.trace[-1] if r.trace else 'construction'} produced an invalid factor: {chk.reason}")
    return r


def solve(lst: LengthList, method: str = "auto", node_limit: int | None = DEFAULT_NODE_LIMIT) -> SolveResult:
    """Decide ``lst`` and, when feasible, return a validated cyclic realization.

    A forced ``method`` whose hypotheses fail raises PreconditionViolation;
    there is no silent fallback.
    """
    if method not in METHOD_NAMES:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHOD_NAMES)}")
    lst.check(Mode.CYCLIC)
    feas = check_condition(lst)
    if not feas:
        return SolveResult(INFEASIBLE, feas, trace=(Step("check_condition", {"divisor": feas.divisor}),))

    if method == "oracle":
        return _oracle(lst, feas, node_limit, (), "oracle")
    if method != "auto":
        r = _gate(_run(method, lst), lst)
        return SolveResult(REALIZED, feas, r, r.trace, method)

    chosen = _auto_method(lst)
    attempts: tuple[Step, ...] = ()
    if chosen == "12t":
        a, b, t, c = _split_12t(lst)
        r, tried = realize_12t(a, b, t, c)
        attempts = tuple(tried)
        if r is not None:
            r = _gate(_as_cyclic(r, lst), lst)
            return SolveResult(REALIZED, feas, r, attempts + r.trace, r.trace[-1].name if r.trace else "12t")
    elif chosen is not None:
        r = _gate(_run(chosen, lst), lst)
        return SolveResult(REALIZED, feas, r, r.trace, chosen)
    return _oracle(lst, feas, node_limit, attempts, None)


def _oracle(lst, feas, node_limit, attempts, method) -> SolveResult:
    # a forced search counts as realized; a fallback is flagged as non-constructive
    verdict = REALIZED if method == "oracle" else UNSUPPORTED
    try:
        r = search_realization(lst, SearchOptions(node_limit=node_limit, normalize=True))
    except SearchLimitExceeded as exc:
        return SolveResult(INDETERMINATE, feas, None, attempts + (Step("oracle", {"nodes": exc.nodes, "decided": False}),), "oracle")
    if r is None:
        # a feasible list without realization would refute the conjecture
        return SolveResult(UNSUPPORTED, feas, None, attempts + (Step("oracle", {"found": False}),), "oracle")
    r = _gate(r, lst)
    return SolveResult(verdict, feas, r, attempts + r.trace, "oracle")


__all__ = [
    "DEFAULT_NODE_LIMIT",
    "INDETERMINATE",
    "INFEASIBLE",
    "METHOD_NAMES",
    "REALIZED",
    "SolveResult",
    "UNSUPPORTED",
    "ValidationFailure",
    "solve",
]
