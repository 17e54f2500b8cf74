"""Building-block realizations and the composition algebra on them.

Linear realizations are written as slot words (see :class:`SlotSequence`).
Composition glues words:

* ``p + X``  drop the trailing zero of the perfect word, append ``X``'s word;
* ``ap + ap`` overlay the reversed second word on the hole of the first, so
  the two holes fill each other and a single trailing zero remains.
"""

from __future__ import annotations

import math
from typing import Mapping, Sequence

from .feasibility import check_condition
from .model import (
    EMPTY,
    Infeasible,
    InvalidInput,
    Kind,
    LengthList,
    NearOneFactor,
    PreconditionViolation,
    Realization,
    Step,
    diff_multiset,
    from_sequence,
    multiply,
    to_sequence,
)


def from_word(word: Sequence[int], name: str | None = None, **params) -> Realization:
    r = from_sequence(tuple(word))
    if name:
        r = r.with_step(Step(name, params, r.kind.value))
    return r


def word_of(r: Realization) -> tuple[int, ...]:
    return to_sequence(r).slots


def perfect_ones(k: int) -> Realization:
    """p{1^k}: the word (1,1,1,1,...,0)."""
    if k < 0:
        raise PreconditionViolation(f"negative number of 1s ({k})")
    return from_word((1, 1) * k + (0,))


def perfect_xx(x: int) -> Realization:
    """p{x^x} on ``2x+1`` vertices: edges ``[i, i+x]`` for ``i < x``."""
    if x < 1:
        raise PreconditionViolation("x must be positive")
    f = NearOneFactor.build(2 * x + 1, ((i, i + x) for i in range(x)), 2 * x)
    return Realization.linear(f, LengthList(((x, x),)), (Step("perfect_xx", {"x": x}, "perfect"),))


def block_x_xminus1(x: int) -> Realization:
    """Linear realization of {x^(x-1)} on ``2x-1`` vertices; almost perfect for x=2."""
    if x < 1:
        raise PreconditionViolation("x must be positive")
    f = NearOneFactor.build(2 * x - 1, ((i, i + x) for i in range(x - 1)), x - 1)
    lst = LengthList(((x, x - 1),)) if x > 1 else LengthList()
    return Realization.linear(f, lst, (Step("block_x_xminus1", {"x": x}),))


def perfect_odd_chain(k: int) -> Realization:
    """p{1,3,...,2k+1}: the word (2k+1,...,3,1,1,3,...,2k+1,0)."""
    if k < 0:
        raise PreconditionViolation("k must be non-negative")
    odds = [2 * i + 1 for i in range(k + 1)]
    return from_word(odds[::-1] + odds + [0], "perfect_odd_chain", k=k)


def compose(r1: Realization, r2: Realization) -> Realization:
    """Join two linear realizations: p+p=p, p+ap=ap, ap+ap=p, p+r=r."""
    for r in (r1, r2):
        if r.factor.v > 1 and diff_multiset(r.factor) != r.list:
            raise InvalidInput(f"composition needs linear realizations, got {r.kind.value} of {r.list}")
    f1, f2 = r1.factor, r2.factor
    b1, b2 = f1.base, f2.base
    e1 = [(x - b1, y - b1) for x, y in f1.edges]
    e2 = [(x - b2, y - b2) for x, y in f2.edges]
    if r1.kind is Kind.PERFECT:
        shift = f1.v - 1
        edges = e1 + [(x + shift, y + shift) for x, y in e2]
        iso = f2.isolated - b2 + shift
        v = f1.v + f2.v - 1
        rule = "p+" + r2.kind.short
    elif r1.kind is Kind.ALMOST_PERFECT and r2.kind is Kind.ALMOST_PERFECT:
        w1, w2 = f1.v - 1, f2.v - 1
        off = w1 - 1
        edges = e1 + [(off + w2 - y, off + w2 - x) for x, y in e2]
        v = f1.v + f2.v - 1
        iso = v - 1
        rule = "ap+ap"
    else:
        raise InvalidInput(f"cannot compose {r1.kind.value} with {r2.kind.value}")
    f = NearOneFactor.build(v, edges, iso)
    out = Realization.linear(f, r1.list + r2.list)
    return Realization(out.factor, out.kind, out.list, r1.trace + r2.trace + (Step("compose", {"rule": rule}, out.kind.value),))


def compose_all(parts: Sequence[Realization]) -> Realization:
    out = EMPTY
    for p in parts:
        if p.factor.v == 1:
            continue
        out = p if out is EMPTY else compose(out, p)
    return out


def times(r: Realization, q: int) -> Realization:
    """q . pL, the q-fold composition of a perfect realization."""
    if q == 0:
        return EMPTY
    if r.kind is not Kind.PERFECT:
        raise InvalidInput("repeated composition needs a perfect realization")
    word = word_of(r)[:-1] * q + (0,)
    return from_word(word, "repeat", times=q, of=str(r.list))


def perfect_odd_list(mults: Sequence[int]) -> Realization:
    """p{1^a0, 3^a1, ..., (2m+1)^am} for non-increasing a0 >= a1 >= ... >= am >= 1."""
    mults = list(mults)
    if not mults or any(a < 1 for a in mults):
        raise PreconditionViolation("multiplicities must be positive")
    if any(mults[i] < mults[i + 1] for i in range(len(mults) - 1)):
        raise PreconditionViolation("multiplicities must be non-increasing")
    m = len(mults) - 1
    parts = [times(perfect_odd_chain(m), mults[m])]
    parts += [times(perfect_odd_chain(i), mults[i] - mults[i + 1]) for i in range(m)]
    return compose_all(parts).with_step(Step("perfect_odd_list", {"mults": tuple(mults)}, "perfect"))


def inflate(r: Realization, k: Mapping[int, int]) -> Realization:
    """Prepend k_l copies of p{l^l} for each length l; the kind is unchanged."""
    parts = [times(perfect_xx(x), k[x]) for x in sorted(k) if k[x]]
    if not parts:
        return r
    return compose(compose_all(parts), r)


def realize_1y(a: int, y: int, b: int) -> Realization:
    """Linear realization of {1^a, y^b}, available whenever a >= floor((y-1)/2)."""
    if y < 2:
        raise PreconditionViolation("y must be at least 2")
    if a < 0 or b < 0:
        raise PreconditionViolation("counts must be non-negative")
    if a < (y - 1) // 2 and b > 0:
        raise PreconditionViolation(f"need a >= {(y - 1) // 2} for y={y}, got a={a}")
    q, r = divmod(b, y)
    ys = (y,) * r
    ones_used = (y - r) // 2
    if (y - r) % 2 == 0:
        tail = ys + (1, 1) * ones_used + ys + (0,)
    else:
        tail = ys + (1, 1) * ones_used + (0,) + ys
    if r == 0 and ones_used > a:
        # b is a multiple of y and the trailing block would need more 1s than exist
        tail, ones_used = (0,), 0
    params = {"a": a, "y": y, "b": b, "q": q, "r": r}
    tail_r = from_word(tail)
    out = compose_all([perfect_ones(a - ones_used), times(perfect_xx(y), q), tail_r])
    if out is EMPTY:
        return EMPTY
    return Realization(out.factor, out.kind, out.list, (Step("realize_1y", params, out.kind.value),))


def _realize_12(a: int, b: int) -> Realization:
    if a == 0 and b == 0:
        return EMPTY
    return realize_1y(a, 2, b)


def realize_12(a: int, b: int) -> Realization:
    """{1^a, 2^b}: perfect when b is even, almost perfect when b is odd."""
    if a < 0 or b < 0 or a + b == 0:
        raise InvalidInput("need a, b >= 0 with a + b >= 1")
    return _realize_12(a, b)


def base_ones(n: int) -> NearOneFactor:
    return NearOneFactor.build(2 * n + 1, ((2 * i, 2 * i + 1) for i in range(n)), 2 * n)


def realize_constant(x: int, n: int) -> Realization:
    """{x^n}: multiply the all-1s factor by x modulo 2n+1."""
    if n < 1 or not 1 <= x <= n:
        raise InvalidInput(f"need 1 <= x <= n, got x={x}, n={n}")
    lst = LengthList(((x, n),))
    v = 2 * n + 1
    if x > 1 and math.gcd(x, v) > 1:
        raise Infeasible(check_condition(lst))
    f = base_ones(n) if x == 1 else multiply(base_ones(n), x)
    return Realization(f, Kind.CYCLIC, lst, (Step("realize_constant", {"x": x, "n": n}, "cyclic"),))


def patterned_starter(n: int) -> Realization:
    """{1,2,...,n} via the pairs [i, 2n-1-i] with 2n isolated."""
    if n < 1:
        raise InvalidInput("n must be positive")
    f = NearOneFactor.build(2 * n + 1, ((i, 2 * n - 1 - i) for i in range(n)), 2 * n)
    lst = LengthList(tuple((k, 1) for k in range(1, n + 1)))
    return Realization(f, Kind.CYCLIC, lst, (Step("patterned_starter", {"n": n}, "cyclic"),))
