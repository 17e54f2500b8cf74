"""Realizations of lists {1^a, 2^b, t^c}.

Four constructive families, tried in this order by :func:`realize_12t`:

* ``big``     linear realization when a+b >= floor((t-1)/2);
* ``shared``  gcd(t, v) = d > 1, on the d x (v/d) grid with rows 0,2,1,3,...;
* ``coprime`` gcd(t, v) = 1 with a+b above a residue bound, on the incomplete t-row grid;
* ``pattern`` / ``small`` explicit leftover families for t = 19 and t in {8, 9}.

Grid constructions place the 1- and 2-edges first and then pair the
remaining cells of every row into t-edges.
"""

from __future__ import annotations

import math
from typing import Callable

from .blocks import _realize_12, compose_all, from_word, perfect_xx, times
from .grid import VertexGrid, build_cop_grid, build_notcop_grid
from .model import (
    InvalidInput,
    Kind,
    LengthList,
    Mode,
    NearOneFactor,
    PreconditionViolation,
    Realization,
    Step,
    WrongSolver,
    validate,
)


def _list(a: int, b: int, t: int, c: int) -> LengthList:
    if min(a, b, c) < 0 or t < 3:
        raise InvalidInput(f"need a, b, c >= 0 and t >= 3 (a={a}, b={b}, t={t}, c={c})")
    return LengthList.from_counts({1: a, 2: b, t: c})


def _twos(k: int) -> tuple[int, ...]:
    """k interlocked 2-pairs (2,2,2,2)...; k must be even."""
    assert k % 2 == 0 and k >= 0, k
    return (2, 2, 2, 2) * (k // 2)


def _twos_hooked(k: int) -> tuple[int, ...]:
    """k 2-pairs ending in a hooked (2,0,2); k must be odd."""
    assert k % 2 == 1, k
    return _twos(k - 1) + (2, 0, 2)


def _ones(k: int) -> tuple[int, ...]:
    assert k >= 0, k
    return (1, 1) * k


def _last_t_word(t: int) -> tuple[int, ...]:
    """Linear slot word for {1, 2, t^(t-1)}."""
    if t == 3:
        return (1, 1, 2, 3, 2, 3, 3, 0, 3)
    if t == 4:
        return (4, 1, 1, 4, 4, 4, 2, 4, 2, 4, 0)
    slots: list[int | None] = [None] * (2 * t + 3)
    slots[1] = slots[2] = 1
    slots[t - 2] = 0
    slots[2 * t - 2] = slots[2 * t] = 2
    for i, x in enumerate(slots):
        if x is None:
            slots[i] = slots[i + t] = t
    return tuple(slots)  # type: ignore[arg-type]


def _big_inner(a: int, b: int, t: int, r: int) -> tuple[tuple[int, ...], bool, tuple[int, int], str]:
    """Slot word for {1^a', 2^b', t^r} and how many 1s/2s remain for the companion block.

    Returns (word, word_first, (ones_left, twos_left), label).  ``word_first``
    says whether the word is the perfect left factor (p + rest) or the right
    factor (p{rest} + word).
    """
    T = (t,) * r
    s = t - r
    cls = s % 4
    if cls == 0:
        if b >= s // 2:
            return T + _twos(s // 2) + T + (0,), True, (a, b - s // 2), "1:b>=(t-r)/2"
        if b % 2 == 0:
            k = (s - 2 * b) // 2
            return T + _twos(b) + _ones(k) + T + (0,), True, (a - k, 0), "1:b<,even"
        k = (s - 2 * b) // 2 + 1
        return T + _twos(b - 1) + _ones(k) + T + (0,), True, (a - k, 1), "1:b<,odd"
    if cls == 1:
        if b % 2 == 0:
            if b >= (s - 1) // 2:
                return T + _twos((s - 1) // 2) + (0,) + T, False, (a, b - (s - 1) // 2), "2:even,b>="
            k = (s - 2 * b - 1) // 2
            return T + _twos(b) + _ones(k) + (0,) + T, False, (a - k, 0), "2:even,b<"
        if s == 1:
            # the general odd-b word needs t-r >= 3; borrow one 1 and one 2 instead
            return _last_t_word(t), False, (a - 1, b - 1), "2:odd,r=t-1"
        if b >= (s - 1) // 2:
            return T + (1, 1) + _twos_hooked((s - 3) // 2) + T, False, (a - 1, b - (s - 3) // 2), "2:odd,b>="
        k = (s - 2 * b - 1) // 2
        return T + _twos_hooked(b) + _ones(k) + T, False, (a - k, 0), "2:odd,b<"
    if cls == 2:
        if b >= (s - 2) // 2:
            return T + (1, 1) + _twos(s // 2 - 1) + T + (0,), True, (a - 1, b - s // 2 + 1), "3:b>="
        if b % 2 == 0:
            k = (s - 2 * b) // 2
            return T + _twos(b) + _ones(k) + T + (0,), True, (a - k, 0), "3:b<,even"
        k = (s - 2 * b) // 2 + 1
        return T + _twos(b - 1) + _ones(k) + T + (0,), True, (a - k, 1), "3:b<,odd"
    if b % 2 == 0:
        if b >= (s - 1) // 2:
            return T + (1, 1) + _twos((s - 3) // 2) + (0,) + T, False, (a - 1, b - (s - 3) // 2), "4:even,b>="
        k = (s - 2 * b - 1) // 2
        return T + _twos(b) + _ones(k) + (0,) + T, False, (a - k, 0), "4:even,b<"
    if b >= (s - 1) // 2:
        return T + _twos_hooked((s - 1) // 2) + T, False, (a, b - (s - 1) // 2), "4:odd,b>="
    k = (s - 2 * b - 1) // 2
    return T + _twos_hooked(b) + _ones(k) + T, False, (a - k, 0), "4:odd,b<"


def _big_corner(a: int, b: int, t: int, r: int) -> tuple[int, ...] | None:
    """Almost perfect words for a+b = (t-r)/2, b odd, r in {1, 2}.

    There the odd-b branches above would need one 1 more than the list has.
    """
    if (t - r) % 2 or a + b != (t - r) // 2 or b % 2 == 0:
        return None
    if r == 1:
        return (2, t, 2) + _twos(b - 1) + _ones(a) + (0, t)
    if r == 2:
        return (t, 2, t, 2) + _twos(b - 1) + _ones(a) + (t, 0, t)
    return None


def realize_12t_big(a: int, b: int, t: int, c: int) -> Realization:
    """Linear realization of {1^a, 2^b, t^c} when a+b >= floor((t-1)/2)."""
    lst = _list(a, b, t, c)
    if a + b < (t - 1) // 2:
        raise PreconditionViolation(f"need a+b >= {(t - 1) // 2}")
    q, r = divmod(c, t)
    params: dict = {"a": a, "b": b, "t": t, "c": c, "q": q, "r": r}
    block_t = times(perfect_xx(t), q)
    if r == 0:
        rest = _realize_12(a, b)
        params["case"] = "r=0"
        out = compose_all([block_t, rest])
    else:
        word, first, (a2, b2), label = _big_inner(a, b, t, r)
        params["case"] = label
        if a2 < 0 or b2 < 0:
            word = _big_corner(a, b, t, r)
            if word is None:
                raise PreconditionViolation(f"case {label} needs {-min(a2, b2)} more short edges")
            first, (a2, b2) = False, (0, 0)
            params["case"] = label + ",corner"
        inner = from_word(word)
        params["inner"] = word
        rest = _realize_12(a2, b2)
        if first and rest.kind is Kind.PERFECT:
            # both perfect: the ones/twos block goes in front of the inner word
            out = compose_all([block_t, rest, inner])
        elif first:
            out = compose_all([block_t, inner, rest])
        else:
            if rest.factor.v > 1 and rest.kind is not Kind.PERFECT:
                raise PreconditionViolation("companion block is not perfect")
            out = compose_all([block_t, rest, inner])
    if out.list != lst:
        raise AssertionError(f"big construction built {out.list}, wanted {lst}")
    return Realization(out.factor, out.kind, lst, (Step("big", params, out.kind.value),))


def _choose_split(a: int, b: int, total: int, odd_a: bool, a_tilde: int | None) -> tuple[int, int, int, int]:
    """(a~, b~, alpha, beta): a~+b~ = total, a-a~ = 2 alpha (+1 if odd_a), b-b~ = 2 beta.

    Picks the largest admissible a~ unless ``a_tilde`` pins it.
    """
    cands = []
    for at in range(min(a, total), -1, -1):
        bt = total - at
        if bt > b or bt < 0:
            continue
        if (a - at) % 2 != int(odd_a) or (b - bt) % 2:
            continue
        cands.append(at)
    if a_tilde is not None:
        cands = [x for x in cands if x == a_tilde]
    if not cands:
        raise PreconditionViolation(f"no admissible split of {total} short edges (a={a}, b={b})")
    at = cands[0]
    bt = total - at
    return at, bt, (a - at) // 2, (b - bt) // 2


def _finish(g: VertexGrid, short: list[tuple[int, int]], lst: LengthList, isolated: int | None = None) -> NearOneFactor:
    used = {z for e in short for z in e}
    if len(used) != 2 * len(short):
        raise PreconditionViolation("short edges overlap")
    if len(g.odd_rows(used)) != 1:
        raise PreconditionViolation(f"even-run checkpoint failed: odd rows {g.odd_rows(used)}")
    long_, iso = g.complete(used, isolated)
    f = NearOneFactor.build(g.v, short + long_, iso)
    chk = validate(f, lst, Mode.CYCLIC)
    if not chk:
        raise PreconditionViolation(f"grid construction invalid: {chk.reason}")
    return f


def _edges(f: NearOneFactor, shift: int = 0) -> list[tuple[int, int]]:
    return [(x + shift, y + shift) for x, y in f.edges]


def _reflect(f: NearOneFactor, d: int) -> NearOneFactor:
    """x -> d-1-x on a factor of K_d; moves the isolated vertex to the top of column 1."""
    assert f.v == d, (f.v, d)
    return NearOneFactor.build(f.v, ((d - 1 - y, d - 1 - x) for x, y in f.edges), d - 1 - f.isolated)


def realize_12t_shared(a: int, b: int, t: int, c: int, a_tilde: int | None = None) -> Realization:
    """Cyclic realization when d = gcd(t, v) > 1."""
    lst = _list(a, b, t, c)
    v = lst.v
    d = math.gcd(t, v)
    if d == 1:
        raise WrongSolver("gcd(t, v) = 1")
    if t > lst.n:
        raise InvalidInput("t exceeds n")
    half = (d - 1) // 2
    cols = v // d
    if a + b < half:
        raise PreconditionViolation(f"need a+b >= (d-1)/2 = {half}")
    if 2 * d * c < v + d:
        raise PreconditionViolation("need c >= (v+d)/(2d)")
    if cols < 5:
        raise PreconditionViolation("grid needs at least 5 columns")
    g = build_notcop_grid(v, t, d)
    m = g.m
    short: list[tuple[int, int]] = []
    params: dict = {"d": d, "grid": g}
    if (a + b - half) % 2 == 0:
        at, bt, alpha, beta = _choose_split(a, b, half, False, a_tilde)
        params.update(case="1", a_tilde=at, b_tilde=bt)
        base = _reflect(_realize_12(at, bt).factor, d)
        short += _edges(base)
        iso = base.isolated
        qb, rb = divmod(2 * alpha, cols - 1)
        for i in range(half - qb + 1, half + 1):
            short += [(m(2 * i, j), m(2 * i + 1, j)) for j in range(2, cols + 1)]
        i0 = half - qb
        if rb:
            short += [(m(2 * i0, j), m(2 * i0 + 1, j)) for j in range(2, rb + 2)]
        qt, rt = divmod(2 * beta, cols - 1)
        for i in range(qt):
            short += [(m(2 * i + 1, j), m(2 * i + 2, j)) for j in range(2, cols + 1)]
        if rt:
            short += [(m(2 * qt + 1, j), m(2 * qt + 2, j)) for j in range(cols - rt + 1, cols + 1)]
    else:
        at, bt, alpha, beta = _choose_split(a, b, half, True, a_tilde)
        params.update(case="2", a_tilde=at, b_tilde=bt)
        iso = None
        short += _edges(_realize_12(at, bt).factor)
        qb, rb = divmod(2 * beta, cols - 1)
        for i in range(qb):
            short += [(m(2 * i + 1, j), m(2 * i + 2, j)) for j in range(2, cols + 1)]
        if rb:
            short += [(m(2 * qb + 1, j), m(2 * qb + 2, j)) for j in range(cols - rb + 1, cols + 1)]
        short.append((m(d - 1, 3), m(d, 3)))
        if 2 * alpha <= cols - 3:
            short += [(m(d - 1, j), m(d, j)) for j in range(4, 2 * alpha + 4)]
        else:
            qt, rt = divmod(2 * alpha - (cols - 3), cols - 1)
            short += [(m(d - 1, j), m(d, j)) for j in range(4, cols + 1)]
            for i in range(1, qt + 1):
                short += [(m(d - 2 * i, j), m(d - 2 * i - 1, j)) for j in range(2, cols + 1)]
            short += [(m(d - 2 * qt - 2, j), m(d - 2 * qt - 3, j)) for j in range(2, rt + 2)]
    f = _finish(g, short, lst, isolated=iso)
    return Realization(f, Kind.CYCLIC, lst, (Step("shared", params, "cyclic"),))


def cop_bound(t: int, v: int) -> int:
    """Smallest a+b the coprime construction accepts."""
    q = v // t
    rp = v % (2 * t)
    return (rp - 1) // 2 if q % 2 == 0 else t - (rp + 1) // 2


def realize_12t_coprime(a: int, b: int, t: int, c: int, a_tilde: int | None = None) -> Realization:
    """Cyclic realization when gcd(t, v) = 1 and a+b reaches :func:`cop_bound`."""
    lst = _list(a, b, t, c)
    v = lst.v
    if math.gcd(t, v) != 1:
        raise WrongSolver("gcd(t, v) > 1")
    if t > lst.n:
        raise InvalidInput("t exceeds n")
    bound = cop_bound(t, v)
    if a + b < bound:
        raise PreconditionViolation(f"need a+b >= {bound}")
    q, r = divmod(v, t)
    rp = v % (2 * t)
    g = build_cop_grid(v, t)
    m = g.m
    short: list[tuple[int, int]] = []
    params: dict = {"q": q, "r": r, "r'": rp, "grid": g}
    if q % 2 == 0:
        half = (rp - 1) // 2
        if a + b == half:
            params["case"] = "1A"
            short += _edges(_realize_12(a, b).factor)
        elif rp == 1:
            params["case"] = "1B,r'=1"
            sub = _realize_12(a // 2, b // 2)
            size = sub.factor.v - 1
            short += _edges(sub.factor, t - size - 1) + _edges(sub.factor, 2 * t - size - 1)
            if a % 2 == 0 and b % 2 == 1:
                short.append((1, v - 1))
            elif a % 2 == 1 and b % 2 == 0:
                short.append((0, v - 1))
            elif a % 2 == 1 and b % 2 == 1:
                short += [(v - t - 1, v - t), (1, v - 1)]
        else:
            odd = (a + b - half) % 2 == 1
            at, bt, alpha, beta = _choose_split(a, b, half, odd, a_tilde)
            params.update(case="1B" + (",odd" if odd else ",even"), a_tilde=at, b_tilde=bt)
            base = _realize_12(at, bt).factor
            sub = _realize_12(alpha, beta).factor
            k = 2 * (alpha + beta) + 1
            short += _edges(base, t * q) + _edges(sub, t - k) + _edges(sub, 2 * t - k)
            if odd:
                i = base.isolated
                if i < 1:
                    raise PreconditionViolation("patch edge needs the isolated vertex >= 1")
                short.append((m(i, 1), m(i + 1, 1)))
    else:
        half = t - (rp + 1) // 2
        if a + b == half:
            params["case"] = "2A"
            short += _edges(_realize_12(a, b).factor, t - 2 * (a + b) - 1)
        elif half == 0 and b % 2 == 1:
            # r' = 2t-1 leaves no room for a~, b~ of the right parity when b is odd
            params["case"] = "2B,r'=2t-1"
            if a // 2 + b // 2:
                sub = _realize_12(a // 2, b // 2).factor
                short += _edges(sub) + _edges(sub, t)
            short.append((t - 3, t - 1))
            if a % 2:
                short.append((2 * t - 3, 2 * t - 2))
        else:
            odd = (a + b - half) % 2 == 1
            at, bt, alpha, beta = _choose_split(a, b, half, odd, a_tilde)
            params.update(case="2B" + (",odd" if odd else ",even"), a_tilde=at, b_tilde=bt)
            base = _realize_12(at, bt).factor
            sub = _realize_12(alpha, beta).factor
            short += _edges(base, v - t) + _edges(sub) + _edges(sub, t)
            if odd:
                i = base.isolated + r
                short.append((m(i, 1), m(i + 1, 1)))
    f = _finish(g, short, lst)
    return Realization(f, Kind.CYCLIC, lst, (Step("coprime", params, "cyclic"),))


def realize_12t_small(a: int, b: int, t: int, c: int) -> Realization:
    """The leftover families {1,2,8^(8q'+1)}, {1,2,8^(8q'+2)}, {1,2,9^(9q'+1)}, {1,2,9^(9q'+3)}."""
    lst = _list(a, b, t, c)
    if t > 11:
        raise WrongSolver("only t <= 11")
    if t in (10, 11):
        raise WrongSolver("t = 10, 11 leftovers are settled by search")
    if (a, b) != (1, 1) or t not in (8, 9):
        raise WrongSolver("no explicit leftover family for this list")
    if c < t:
        raise PreconditionViolation("family needs c >= t")
    v = lst.v
    g = build_cop_grid(v, t)
    m = g.m
    q = v // t
    res = c % t
    if t == 8 and res == 1:
        short = [(m(2, 1), m(1, q + 1)), (m(3, 1), m(4, 1)), (m(5, 1), m(7, 1))]
    elif t == 8 and res == 2:
        short = [(m(2, 1), m(3, q)), (m(4, 1), m(5, 1)), (m(6, 1), m(8, 1))]
    elif t == 9 and res == 1:
        short = [(m(3, 1), m(1, q + 1)), (m(2, 1), m(4, 1)), (m(5, 1), m(6, 1))]
    elif t == 9 and res == 3:
        short = [(m(7, 1), m(9, q)), (m(3, 1), m(4, 1)), (m(6, 1), m(8, 1))]
    else:
        raise WrongSolver(f"c = {c} is not in a leftover residue class for t = {t}")
    f = _finish(g, short, lst)
    return Realization(f, Kind.CYCLIC, lst, (Step("small", {"t": t, "residue": res, "grid": g}, "cyclic"),))


def realize_12t_example_patterns(a: int, b: int, t: int, c: int) -> Realization:
    """{1,2,19^(19k+4)} and {1,2,19^(19k+9)}, k >= 1."""
    lst = _list(a, b, t, c)
    if (a, b, t) != (1, 1, 19) or c % 19 not in (4, 9) or c < 19:
        raise WrongSolver("pattern only for {1,2,19^(19k+4)} and {1,2,19^(19k+9)}, k >= 1")
    v = lst.v
    g = build_cop_grid(v, t)
    m = g.m
    q = v // t
    if c % 19 == 4:
        short = [(m(i, q + 1), m(i + 6, 1)) for i in range(1, 5)]
        short += [(m(5, q + 1), m(6, q + 1)), (m(11, q + 1), m(13, q + 1))]
        iso = m(12, q + 1)
    else:
        short = [(m(i, q + 1), m(i + 15, 1)) for i in range(1, 5)]
        short += [(m(i, 1), m(i + 4, q)) for i in range(1, 5)]
        short += [(m(9, 1), m(13, q)), (m(10, 1), m(12, 1)), (m(14, 1), m(15, 1))]
        iso = m(11, 1)
    f = _finish(g, short, lst, isolated=iso)
    return Realization(f, Kind.CYCLIC, lst, (Step("pattern", {"t": 19, "k": c // 19, "grid": g}, "cyclic"),))


def _as_cyclic(r: Realization, lst: LengthList) -> Realization:
    chk = validate(r.factor, lst, Mode.CYCLIC)
    if not chk:
        raise PreconditionViolation(f"linear realization is not cyclic: {chk.reason}")
    return r


METHODS: dict[str, Callable[..., Realization]] = {
    "big": realize_12t_big,
    "shared": realize_12t_shared,
    "coprime": realize_12t_coprime,
    "pattern": realize_12t_example_patterns,
    "small": realize_12t_small,
}


def realize_12t(a: int, b: int, t: int, c: int) -> tuple[Realization | None, list[Step]]:
    """Try the constructive families in order; returns (realization or None, attempts)."""
    lst = _list(a, b, t, c)
    attempts: list[Step] = []
    for name, fn in METHODS.items():
        try:
            r = fn(a, b, t, c)
            if name == "big":
                r = _as_cyclic(r, lst)
        except (PreconditionViolation, InvalidInput) as exc:
            attempts.append(Step(name, {"skipped": str(exc)}))
            continue
        return r, attempts
    return None, attempts
