"""The divisor condition every edge-length list of a near 1-factor obeys.

For each divisor ``d`` of ``v = 2n+1`` at most ``(v-d)/2`` lengths may be
multiples of ``d``: an edge whose length is a multiple of ``d`` joins two
vertices of the same residue class mod ``d``, and each of the ``d`` classes
has an odd number ``v/d`` of vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import LengthList, Mode


@dataclass(frozen=True)
class FeasibilityVerdict:
    feasible: bool
    divisor: int | None = None
    count: int | None = None
    bound: int | None = None

    @property
    def status(self) -> str:
        return "feasible" if self.feasible else "violated"

    def __bool__(self) -> bool:
        return self.feasible

    def __str__(self) -> str:
        if self.feasible:
            return "feasible"
        return (
            f"violated at d={self.divisor}: {self.count} multiples of {self.divisor}"
            f" > (v-d)/2 = {self.bound}"
        )

    def to_dict(self) -> dict:
        out = {"status": self.status}
        if not self.feasible:
            out.update(divisor=self.divisor, count=self.count, bound=self.bound)
        return out


def divisors(v: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= v:
        if v % d == 0:
            small.append(d)
            if d * d != v:
                large.append(v // d)
        d += 1
    return small + large[::-1]


def _multiples(lst: LengthList, d: int) -> int:
    return sum(m for x, m in lst.items if x % d == 0)


def violations(lst: LengthList) -> list[FeasibilityVerdict]:
    """Every violating divisor, ascending."""
    lst.check(Mode.CYCLIC)
    v = lst.v
    out = []
    for d in divisors(v):
        count, bound = _multiples(lst, d), (v - d) // 2
        if count > bound:
            out.append(FeasibilityVerdict(False, d, count, bound))
    return out


def check_condition(lst: LengthList) -> FeasibilityVerdict:
    """Feasible, or the smallest violating divisor with its count and bound."""
    bad = violations(lst)
    return bad[0] if bad else FeasibilityVerdict(True)
