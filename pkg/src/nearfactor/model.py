"""Data model: length lists, near 1-factors, realizations and slot sequences.

Vertices of ``K_v`` are the integers ``0..v-1``.  A near 1-factor on ``v``
(odd) vertices has ``(v-1)/2`` disjoint edges and one isolated vertex.
"""

from __future__ import annotations

import enum
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping


class InvalidInput(ValueError):
    """Malformed list, factor or sequence."""


class PreconditionViolation(ValueError):
    """A construction was asked for parameters outside its hypotheses."""


class WrongSolver(PreconditionViolation):
    """The instance belongs to a different family of constructions."""


class Infeasible(ValueError):
    """The list fails the divisor condition, so no realization exists."""

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(str(verdict))


class Mode(str, enum.Enum):
    CYCLIC = "cyclic"
    LINEAR = "linear"


class Kind(str, enum.Enum):
    CYCLIC = "cyclic"
    LINEAR = "linear"
    ALMOST_PERFECT = "almostPerfect"
    PERFECT = "perfect"

    @property
    def short(self) -> str:
        return {"cyclic": "c", "linear": "r", "almostPerfect": "ap", "perfect": "p"}[self.value]


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class LengthList:
    """Multiset of positive edge lengths, stored as sorted ``(length, multiplicity)`` pairs."""

    items: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = 0
        for length, mult in self.items:
            if length < 1 or mult < 1:
                raise InvalidInput(f"bad entry {length}^{mult}")
            if length <= prev:
                raise InvalidInput("entries must be strictly ascending")
            prev = length

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "LengthList":
        return cls(tuple(sorted((int(k), int(m)) for k, m in counts.items() if m)))

    @classmethod
    def of(cls, lengths: Iterable[int]) -> "LengthList":
        return cls.from_counts(Counter(lengths))

    @classmethod
    def parse(cls, text: str) -> "LengthList":
        """Parse ``"1^2,4^3,6"``; whitespace is ignored, multiplicity defaults to 1."""
        text = re.sub(r"\s+", "", text).strip("{}")
        if not text:
            raise InvalidInput("empty list")
        counts: Counter[int] = Counter()
        for tok in text.split(","):
            m = _TOKEN.match(tok)
            if not m:
                raise InvalidInput(f"cannot parse token {tok!r}")
            length = int(m.group(1))
            mult = int(m.group(2) or 1)
            if length < 1 or mult < 1:
                raise InvalidInput(f"non-positive value in token {tok!r}")
            counts[length] += mult
        return cls.from_counts(counts)

    @property
    def counts(self) -> dict[int, int]:
        return dict(self.items)

    @property
    def n(self) -> int:
        return sum(m for _, m in self.items)

    @property
    def v(self) -> int:
        return 2 * self.n + 1

    @property
    def underlying_set(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.items)

    @property
    def max_length(self) -> int:
        return self.items[-1][0] if self.items else 0

    def multiplicity(self, length: int) -> int:
        return self.counts.get(length, 0)

    def elements(self) -> list[int]:
        return [k for k, m in self.items for _ in range(m)]

    def __add__(self, other: "LengthList") -> "LengthList":
        return LengthList.from_counts(Counter(self.counts) + Counter(other.counts))

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        parts = [str(k) if m == 1 else f"{k}^{m}" for k, m in self.items]
        return "{" + ",".join(parts) + "}"

    def check(self, mode: Mode | str = Mode.CYCLIC) -> None:
        """Raise InvalidInput unless the list is usable in ``mode``."""
        mode = Mode(mode)
        if self.n < 1:
            raise InvalidInput("list must be non-empty")
        bound = self.n if mode is Mode.CYCLIC else 2 * self.n
        if self.max_length > bound:
            raise InvalidInput(
                f"length {self.max_length} exceeds {bound} ({mode.value} mode, n={self.n})"
            )


def edge_length(x: int, y: int, v: int) -> int:
    """Circular length ``min(|x-y|, v-|x-y|)`` of the edge ``[x, y]`` of ``K_v``."""
    if not (0 <= x < v and 0 <= y < v):
        raise InvalidInput(f"vertex out of range for v={v}: {x}, {y}")
    if x == y:
        raise InvalidInput("loop edge")
    d = abs(x - y)
    return min(d, v - d)


@dataclass(frozen=True)
class NearOneFactor:
    """Edges plus one isolated vertex on the vertex set ``base..base+v-1``.

    ``base`` is non-zero only for translated blocks (see :func:`translate`).
    Edges are stored normalized: each pair ascending, pairs sorted.
    """

    v: int
    edges: tuple[tuple[int, int], ...]
    isolated: int
    base: int = 0

    @classmethod
    def build(cls, v: int, edges: Iterable[Iterable[int]], isolated: int, base: int = 0):
        norm = []
        for e in edges:
            x, y = e
            norm.append((min(x, y), max(x, y)))
        return cls(v, tuple(sorted(norm)), isolated, base)

    @property
    def vertices(self) -> range:
        return range(self.base, self.base + self.v)

    def problems(self) -> str | None:
        """First violated structural property, or None."""
        if self.v < 1 or self.v % 2 == 0:
            return f"v={self.v} is not a positive odd integer"
        if len(self.edges) != (self.v - 1) // 2:
            return f"expected {(self.v - 1) // 2} edges, found {len(self.edges)}"
        seen = {self.isolated}
        lo, hi = self.base, self.base + self.v
        if not lo <= self.isolated < hi:
            return f"isolated vertex {self.isolated} out of range"
        for x, y in self.edges:
            if x == y:
                return f"loop edge [{x},{y}]"
            for z in (x, y):
                if not lo <= z < hi:
                    return f"vertex {z} out of range"
                if z in seen:
                    return f"endpoints not disjoint: vertex {z} used twice"
                seen.add(z)
        return None

    def check(self) -> None:
        msg = self.problems()
        if msg:
            raise InvalidInput(msg)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_dict(self) -> dict:
        return {"v": self.v, "edges": [list(e) for e in self.edges], "isolated": self.isolated}

    @classmethod
    def from_dict(cls, data: Mapping) -> "NearOneFactor":
        try:
            return cls.build(int(data["v"]), data["edges"], int(data["isolated"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"bad factor document: {exc}") from exc


def length_multiset(f: NearOneFactor) -> LengthList:
    f.check()
    if f.base:
        raise InvalidInput("circular lengths need the vertex set 0..v-1")
    return LengthList.of(edge_length(x, y, f.v) for x, y in f.edges)


def diff_multiset(f: NearOneFactor) -> LengthList:
    f.check()
    return LengthList.of(y - x for x, y in f.edges)


def classify(f: NearOneFactor) -> Kind:
    """Kind of a linear realization, read off the isolated vertex."""
    top = f.base + f.v - 1
    if f.isolated == top:
        return Kind.PERFECT
    if f.isolated == top - 1:
        return Kind.ALMOST_PERFECT
    return Kind.LINEAR


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None
    kind: Kind | None = None

    def __bool__(self) -> bool:
        return self.ok


def validate(f: NearOneFactor, target: LengthList, mode: Mode | str = Mode.CYCLIC) -> Verdict:
    """Check ``f`` is a near 1-factor realizing ``target``; never raises."""
    mode = Mode(mode)
    msg = f.problems()
    if msg:
        return Verdict(False, msg)
    if f.v != target.v:
        return Verdict(False, f"order mismatch: factor has v={f.v}, list needs v={target.v}")
    if mode is Mode.CYCLIC:
        if f.base:
            return Verdict(False, "cyclic check needs vertex set 0..v-1")
        got = LengthList.of(edge_length(x, y, f.v) for x, y in f.edges)
        if got != target:
            return Verdict(False, f"length multiset {got} != {target}")
        return Verdict(True, kind=Kind.CYCLIC)
    got = LengthList.of(y - x for x, y in f.edges)
    if got != target:
        return Verdict(False, f"difference multiset {got} != {target}")
    return Verdict(True, kind=classify(f))


@dataclass(frozen=True)
class Step:
    name: str
    params: dict = field(default_factory=dict)
    kind: str | None = None

    def __str__(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items() if k != "grid")
        tail = f" -> {self.kind}" if self.kind else ""
        return f"{self.name}({args}){tail}"


@dataclass(frozen=True)
class Realization:
    factor: NearOneFactor
    kind: Kind
    list: LengthList
    trace: tuple[Step, ...] = field(default=(), compare=False)

    @classmethod
    def linear(cls, factor: NearOneFactor, lst: LengthList | None = None, trace=()) -> "Realization":
        if lst is None:
            lst = diff_multiset(factor)
        return cls(factor, classify(factor), lst, tuple(trace))

    def with_step(self, step: Step) -> "Realization":
        return Realization(self.factor, self.kind, self.list, self.trace + (step,))

    def check(self) -> None:
        mode = Mode.CYCLIC if self.kind is Kind.CYCLIC else Mode.LINEAR
        if self.factor.v == 1 and not self.list.items:
            return
        verdict = validate(self.factor, self.list, mode)
        if not verdict:
            raise InvalidInput(verdict.reason)
        if mode is Mode.LINEAR and verdict.kind is not self.kind:
            raise InvalidInput(f"declared {self.kind.value}, isolated vertex says {verdict.kind.value}")


EMPTY = Realization(NearOneFactor(1, (), 0), Kind.PERFECT, LengthList())


def translate(f: NearOneFactor, g: int) -> NearOneFactor:
    """Shift every vertex by ``g`` without wrapping (block placement)."""
    return NearOneFactor.build(f.v, ((x + g, y + g) for x, y in f.edges), f.isolated + g, f.base + g)


def multiply(f: NearOneFactor, y: int) -> NearOneFactor:
    """Map every vertex ``x`` to ``y*x mod v``; ``y`` must be a unit mod ``v``."""
    if f.base:
        raise InvalidInput("multiply needs the vertex set 0..v-1")
    if math.gcd(y, f.v) != 1:
        raise InvalidInput(f"{y} is not a unit modulo {f.v}")
    v = f.v
    return NearOneFactor.build(v, (((a * y) % v, (b * y) % v) for a, b in f.edges), (f.isolated * y) % v)


def mapped_length(x: int, y: int, v: int) -> int:
    """Length that ``x`` becomes after multiplying by the unit ``y`` modulo ``v``."""
    r = (x * y) % v
    return r if r <= v // 2 else v - r


@dataclass(frozen=True)
class SlotSequence:
    """Slot word of a linear realization; ``pairs`` records which slots belong together."""

    slots: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.slots) % 2 == 0:
            raise InvalidInput("a slot word has odd length")
        zeros = [i for i, s in enumerate(self.slots) if s == 0]
        if len(zeros) != 1:
            raise InvalidInput(f"expected exactly one zero slot, found {len(zeros)}")
        covered = set(zeros)
        for i, j in self.pairs:
            if not i < j or self.slots[i] != j - i or self.slots[j] != j - i:
                raise InvalidInput(f"pair ({i},{j}) does not match slot values")
            if i in covered or j in covered:
                raise InvalidInput(f"slot reused in pair ({i},{j})")
            covered.update((i, j))
        if len(covered) != len(self.slots):
            raise InvalidInput("some slots are not paired")

    @classmethod
    def from_word(cls, word: Iterable[int]) -> "SlotSequence":
        """Recover the pairing: the leftmost open slot ``i`` can only pair with ``i + s_i``."""
        slots = tuple(int(s) for s in word)
        open_ = [True] * len(slots)
        pairs = []
        for i, s in enumerate(slots):
            if not open_[i] or s == 0:
                continue
            if s < 0:
                raise InvalidInput(f"negative slot value at {i}")
            j = i + s
            if j >= len(slots) or not open_[j] or slots[j] != s:
                raise InvalidInput(f"slot {i} (value {s}) has no partner at {j}")
            open_[i] = open_[j] = False
            pairs.append((i, j))
        return cls(slots, tuple(pairs))

    @property
    def zero(self) -> int:
        return self.slots.index(0)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.slots)) + ")"


def to_sequence(r: Realization | NearOneFactor) -> SlotSequence:
    f = r.factor if isinstance(r, Realization) else r
    if isinstance(r, Realization) and r.kind is Kind.CYCLIC and diff_multiset(f) != r.list:
        raise InvalidInput("only linear realizations have slot sequences")
    f.check()
    slots = [0] * f.v
    pairs = []
    for x, y in f.edges:
        i, j = x - f.base, y - f.base
        slots[i] = slots[j] = j - i
        pairs.append((i, j))
    return SlotSequence(tuple(slots), tuple(sorted(pairs)))


def from_sequence(s: SlotSequence | Iterable[int]) -> Realization:
    if not isinstance(s, SlotSequence):
        s = SlotSequence.from_word(s)
    f = NearOneFactor.build(len(s.slots), s.pairs, s.zero)
    return Realization.linear(f)


def perfect_to_one_factor(r: Realization) -> tuple[tuple[int, int], ...]:
    """Edges of the 1-factor of ``K_{2n}`` left after dropping the isolated vertex ``2n``."""
    if r.kind is not Kind.PERFECT:
        raise InvalidInput(f"need a perfect realization, got {r.kind.value}")
    f = r.factor
    return tuple((x - f.base, y - f.base) for x, y in f.edges)
