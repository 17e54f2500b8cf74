"""Cyclic realizations of two-length lists {x^a, y^b}."""

from __future__ import annotations

import math

from .blocks import realize_1y, realize_constant
from .feasibility import check_condition
from .grid import VertexGrid, build_xy_grid
from .model import (
    Infeasible,
    InvalidInput,
    Kind,
    LengthList,
    Mode,
    NearOneFactor,
    PreconditionViolation,
    Realization,
    Step,
    mapped_length,
    multiply,
    validate,
)


def _via_unit(x: int, a: int, y: int, b: int, v: int, case: str) -> Realization:
    """Send the more frequent length to 1 by a unit, realize {1^., z^.}, map back."""
    big, big_n, small, small_n = (x, a, y, b) if a >= b else (y, b, x, a)
    inv = pow(big, -1, v)
    z = mapped_length(small, inv, v)
    if z == 1:
        raise InvalidInput("lengths collapse under multiplication")
    inner = realize_1y(big_n, z, small_n)
    f = multiply(inner.factor, big)
    lst = LengthList.from_counts({x: a, y: b})
    step = Step("two_lengths", {"case": case, "unit": inv, "z": z}, "cyclic")
    return Realization(f, Kind.CYCLIC, lst, inner.trace + (step,))


def _torus_odd(m, a: int, d: int, cols: int) -> list[tuple[int, int]]:
    """x-edges for the odd branch when columns close up (v/d divides x).

    Then m(d, j) + x = m(1, j), so column 1 has no free partner for m(d, 1).
    Row 1 instead meets row 2 in column 1 and wraps to row d in column 3;
    m(1, 2) stays isolated and every other row keeps even runs.
    """
    xe = [(m(1, 1), m(2, 1)), (m(d, 3), m(1, 3))]
    pairs = [(i, i + 1) for i in range(3, d - 1, 2)]
    xe += [(m(i, 1), m(k, 1)) for i, k in pairs]
    rest = a - len(xe)
    for i, k in pairs:
        take = min(rest, cols - 1)
        xe += [(m(i, j), m(k, j)) for j in range(2, take + 2)]
        rest -= take
    take = min(rest, cols - 3)
    xe += [(m(1, j), m(2, j)) for j in range(4, take + 4)]
    rest -= take
    if rest:
        raise PreconditionViolation(f"{rest} x-edges do not fit")
    return xe


def _grid_case(x: int, a: int, y: int, b: int, v: int, d2: int) -> tuple[NearOneFactor, VertexGrid, str]:
    """Edges of length x in column pairs of the xy-grid, length y along the rows."""
    g = build_xy_grid(v, x, y, d2)
    m = g.m
    cols = v // d2
    half = (d2 - 1) // 2
    if a < half:
        raise PreconditionViolation(f"need a >= {half}")
    if a > half * cols:
        raise PreconditionViolation(f"need a <= (d2-1)v/(2 d2) = {half * cols}")
    xe = [(m(2 * i + 1, 1), m(2 * i + 2, 1)) for i in range(half)]
    extra = a - half
    if extra % 2 == 0:
        branch = "even"
        q, r = divmod(extra, cols - 1)
        for i in range(q):
            xe += [(m(2 * i + 1, j), m(2 * i + 2, j)) for j in range(2, cols + 1)]
        xe += [(m(2 * q + 1, j), m(2 * q + 2, j)) for j in range(2, r + 2)]
    elif (d2 * x) % v == 0:
        branch = "odd,torus"
        xe = _torus_odd(m, a, d2, cols)
    else:
        branch = "odd"
        target = (d2 * x) % v
        k = g.rows[0].index(target) + 1
        xe.append((m(d2, 1), m(1, k)))
        q, r = divmod(a - (d2 + 1) // 2, cols - 1)
        for i in range(1, q + 1):
            xe += [(m(2 * i, j), m(2 * i + 1, j)) for j in range(2, cols + 1)]
        xe += [(m(2 * q + 2, j), m(2 * q + 3, j)) for j in range(2, r + 2)]
    used = {z for e in xe for z in e}
    if len(used) != 2 * len(xe):
        raise PreconditionViolation("x-edges overlap")
    if len(g.odd_rows(used)) != 1:
        raise PreconditionViolation("even-run checkpoint failed before y-edges")
    ye, iso = g.complete(used)
    return NearOneFactor.build(v, xe + ye, iso), g, branch


def _grid_realization(x: int, a: int, y: int, b: int, v: int, d: int, case: str, lst: LengthList) -> Realization:
    f, g, branch = _grid_case(x, a, y, b, v, d)
    return Realization(f, Kind.CYCLIC, lst, (Step("two_lengths", {"case": case, "branch": branch, "d": d, "grid": g}, "cyclic"),))


def realize_two(x: int, a: int, y: int, b: int) -> Realization:
    """Cyclic realization of {x^a, y^b} for any list meeting the divisor condition."""
    if x == y:
        return realize_constant(x, a + b)
    if x > y:
        x, a, y, b = y, b, x, a
    if a == 0:
        return realize_constant(y, b)
    if b == 0:
        return realize_constant(x, a)
    lst = LengthList.from_counts({x: a, y: b})
    lst.check(Mode.CYCLIC)
    verdict = check_condition(lst)
    if not verdict:
        raise Infeasible(verdict)
    v = lst.v
    d1, d2 = math.gcd(x, v), math.gcd(y, v)
    if d1 == 1 and d2 == 1:
        out = _via_unit(x, a, y, b, v, "1")
    elif d2 > 1 and a <= (d2 - 1) * v // (2 * d2):
        out = _grid_realization(x, a, y, b, v, d2, "2", lst)
    elif d2 > 1 and d1 == 1:
        out = _via_unit(x, a, y, b, v, "3")
    elif d1 > 1 and b <= (d1 - 1) * v // (2 * d1):
        out = _grid_realization(y, b, x, a, v, d1, "4", lst)
    elif d2 == 1:
        # Case 3 with the roles of x and y interchanged
        out = _via_unit(x, a, y, b, v, "4:3")
    else:
        raise PreconditionViolation(f"no case applies to {lst}")
    chk = validate(out.factor, lst, Mode.CYCLIC)
    if not chk:
        raise AssertionError(f"two-length construction produced an invalid factor: {chk.reason}")
    return out
